#include <set>

#include "csl/csm.hpp"
#include "csl/error.hpp"
#include "csl/series.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace csl;
using csl::testing::Gen;

namespace {

const FieldTag Q = FieldTag::Rational;
const FieldTag R5 = FieldTag::RootFive;
const FieldTag R2 = FieldTag::RootTwo;

}  // namespace

TEST_CASE("lattices") {
  const OModule bcc = lattice(LatticeKind::Bcc);
  const OModule fcc = lattice(LatticeKind::Fcc);
  const OModule z3 = lattice(LatticeKind::Cubic);
  CHECK(gamma_of(OrderBasis::hurwitz()) == bcc);
  CHECK(index_K(z3, fcc).absolute() == 2);
  CHECK(index_K(bcc, z3).absolute() == 2);
  const OModule mb = lattice(LatticeKind::ModuleB);
  const OModule mf = lattice(LatticeKind::ModuleF);
  CHECK(index_K(mb, mf).absolute() == 4);
  CHECK(gamma_of(OrderBasis::icosian()).scaled(FieldElem(R5, 2L)) == mb);
  CHECK(parse_lattice_kind("mf") == LatticeKind::ModuleF);
  CHECK_THROWS_AS(parse_lattice_kind("hcp"), ParseError);
}

TEST_CASE("icosahedral modules match their congruence descriptions") {
  const OModule mb = lattice(LatticeKind::ModuleB);
  const OModule mf = lattice(LatticeKind::ModuleF);
  const FieldTag t = R5;
  std::vector<RingElem> coeffs;
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) coeffs.emplace_back(t, a, b);
  }
  std::size_t in_b = 0, in_f = 0, total = 0;
  Gen g(51);
  for (int n = 0; n < 4000; ++n) {
    Vec3K v;
    for (auto& x : v) x = FieldElem(coeffs[static_cast<std::size_t>(g.integer(0, 24))]);
    ++total;
    const bool b = csl::testing::in_mb_by_congruence(v);
    const bool f = csl::testing::in_mf_by_congruence(v);
    CHECK(mb.contains(to_vector(v)) == b);
    CHECK(mf.contains(to_vector(v)) == f);
    in_b += b;
    in_f += f;
  }
  CHECK(in_b > 0);
  CHECK(in_f > 0);
  CHECK(in_f < in_b);
  (void)total;
}

TEST_CASE("sigma_index examples") {
  const OrderBasis j = OrderBasis::hurwitz();
  CHECK(sigma_index(j, Quat(Q, 2, 1, 0, 0)) == 5);
  CHECK(sigma_index(j, Quat(Q, 1, 1, 0, 0)) == 1);
  CHECK(sigma_index(j, Quat(Q, 1, 0, 0, 0)) == 1);
  CHECK(sigma_index(OrderBasis::icosian(), Quat(R5, 1, 1, 0, 0)) == 4);
  CHECK(sigma_index(j, Quat(Q, {FieldElem(Q, mpq_class(2, 3)), FieldElem(Q, mpq_class(1, 3)),
                                FieldElem::zero(Q), FieldElem::zero(Q)})) == 5);
  CHECK_THROWS_AS(sigma_index(j, Quat(Q)), DomainError);
}

TEST_CASE("csm_bruteforce examples") {
  const OModule bcc = lattice(LatticeKind::Bcc);
  const CsmResult id = csm_bruteforce(bcc, Quat(Q, 1, 0, 0, 0));
  CHECK(id.csm == bcc);
  CHECK(id.sigma == 1);
  const Quat q(Q, 2, 1, 0, 0);
  CHECK(csm_bruteforce(bcc, q).sigma == 5);
  CHECK(csm_bruteforce(lattice(LatticeKind::Cubic), q).sigma == 5);
  CHECK(csm_bruteforce(lattice(LatticeKind::Fcc), q).sigma == 5);
  CHECK(csm_bruteforce(bcc, cayley_matrix(q)).csm == csm_bruteforce(bcc, q).csm);
  CHECK(csm_bruteforce(lattice(LatticeKind::ModuleB), Quat(R5, 1, 1, 0, 0)).sigma == 4);
  CHECK_THROWS_AS(csm_bruteforce(bcc, Quat(Q)), DomainError);
}

TEST_CASE("count_csms examples") {
  const OrderBasis j = OrderBasis::hurwitz();
  CHECK(count_csms(j, 3).count() == 4);
  CHECK(count_csms(j, 2).count() == 0);
  CHECK(count_csms(j, 1).count() == 1);
  CHECK(count_csms(OrderBasis::octahedral(), 2).count() == 3);
  CHECK(count_csms(OrderBasis::icosian(), 1).count() == 1);
  CHECK_THROWS_AS(count_csms(j, 50, {40, 1}), ResourceError);
}

TEST_CASE("property: CSM records and the ideal/CSM bijection") {
  for (const OrderBasis& o : {OrderBasis::hurwitz(), OrderBasis::icosian(), OrderBasis::octahedral()}) {
    const OModule gamma = gamma_of(o);
    const std::uint64_t top = o.order_tag() == OrderTag::Hurwitz ? 21 : 9;
    for (std::uint64_t m = 1; m <= top; ++m) {
      const CountResult r = count_csms(o, m);
      CHECK(r.ideals == r.count());
      std::set<std::string> keys;
      for (const auto& rec : r.csms) {
        CHECK(rec.sigma == m);
        CHECK(gamma.contains(rec.csm));
        CHECK(index_K(gamma, rec.csm).absolute() == rec.sigma);
        CHECK(o.is_reduced(rec.q));
        keys.insert(rec.csm.key());
      }
      CHECK(keys.size() == r.count());
    }
  }
}

TEST_CASE("property: counts are independent of the worker count") {
  for (const OrderBasis& o : {OrderBasis::hurwitz(), OrderBasis::octahedral()}) {
    for (std::uint64_t m : {7u, 9u}) {
      const CountResult a = count_csms(o, m, {kDefaultCap, 1});
      const CountResult b = count_csms(o, m, {kDefaultCap, 4});
      REQUIRE(a.count() == b.count());
      for (std::size_t i = 0; i < a.count(); ++i) {
        CHECK(a.csms[i].csm == b.csms[i].csm);
        CHECK(a.csms[i].q == b.csms[i].q);
      }
    }
  }
}

TEST_CASE("property: distinct ideals give distinct Eichler orders") {
  for (const OrderBasis& o : {OrderBasis::hurwitz(), OrderBasis::icosian(), OrderBasis::octahedral()}) {
    const std::uint64_t top = o.order_tag() == OrderTag::Hurwitz ? 15 : 9;
    for (std::uint64_t m = 2; m <= top; ++m) {
      const auto reps = enumerate_by_index(o, m);
      std::set<std::string> eichler;
      for (const auto& q : reps) eichler.insert(intersect(o.module(), conjugated_order(o, q)).key());
      CHECK(eichler.size() == reps.size());
    }
  }
}

TEST_CASE("property: counts are multiplicative") {
  const OrderBasis j = OrderBasis::hurwitz();
  for (auto [a, b] : {std::pair{3u, 5u}, {3u, 7u}, {5u, 7u}, {3u, 11u}}) {
    CHECK(count_csms(j, a * b).count() == count_csms(j, a).count() * count_csms(j, b).count());
  }
  const OrderBasis k = OrderBasis::octahedral();
  CHECK(count_csms(k, 14).count() == count_csms(k, 2).count() * count_csms(k, 7).count());
  const OrderBasis i = OrderBasis::icosian();
  CHECK(count_csms(i, 20).count() == count_csms(i, 4).count() * count_csms(i, 5).count());
}

TEST_CASE("property: the cubic lattices share the index") {
  Gen g(52);
  const OrderBasis j = OrderBasis::hurwitz();
  const OModule lat[] = {lattice(LatticeKind::Cubic), lattice(LatticeKind::Fcc), lattice(LatticeKind::Bcc)};
  for (int n = 0; n < 100; ++n) {
    const Quat q = g.order_element(j, 3);
    if (q.is_scalar()) continue;
    const mpz_class s = sigma_index(j, q);
    for (const auto& l : lat) CHECK(csm_bruteforce(l, q).sigma == s);
  }
}

TEST_CASE("property: M_B and M_F share the index") {
  Gen g(53);
  const OrderBasis i = OrderBasis::icosian();
  const OModule mb = lattice(LatticeKind::ModuleB);
  const OModule mf = lattice(LatticeKind::ModuleF);
  for (int n = 0; n < 40; ++n) {
    const Quat q = g.order_element(i, 1);
    if (q.is_scalar()) continue;
    const mpz_class s = sigma_index(i, q);
    CHECK(csm_bruteforce(mb, q).sigma == s);
    CHECK(csm_bruteforce(mf, q).sigma == s);
  }
}

TEST_CASE("rotations given as matrices") {
  const OrderBasis k = OrderBasis::octahedral();
  const FieldElem h(R2, mpq_class(0), mpq_class(1, 2));
  Mat3K rot(R2);
  rot(0, 0) = h;
  rot(0, 1) = -h;
  rot(1, 0) = h;
  rot(1, 1) = h;
  rot(2, 2) = FieldElem::one(R2);
  // rotation by pi/4 about k; its quaternion lies outside K
  CHECK(csm_bruteforce(gamma_of(k), rot).sigma == csm_bruteforce(gamma_of(k), cayley_matrix(rotation_to_quat(rot))).sigma);
  CHECK(csm_bruteforce(gamma_of(k), rot).sigma == 2);
  CHECK(csm_bruteforce(gamma_of(k), cayley_matrix(Quat(R2, {h, FieldElem::zero(R2), FieldElem::zero(R2), h}))).sigma == 1);
  CHECK(csm_bruteforce(lattice(LatticeKind::Cubic), cayley_matrix(Quat(Q, 1, 1, 1, 1))).sigma == 1);
}

TEST_CASE("verify_ideal_correspondence examples") {
  const OrderBasis j = OrderBasis::hurwitz();
  const CorrespondenceReport a = verify_ideal_correspondence(j, Quat(Q, 2, 1, 0, 0));
  CHECK(a.all());
  CHECK(a.norm == 5);
  const CorrespondenceReport b = verify_ideal_correspondence(j, Quat(Q, 1, 0, 0, 0));
  CHECK(b.all());
  CHECK(b.norm == 1);
  const CorrespondenceReport c = verify_ideal_correspondence(OrderBasis::icosian(), Quat(R5, 1, 1, 0, 0));
  CHECK(c.all());
  CHECK(c.norm == 4);
  CHECK_THROWS_AS(verify_ideal_correspondence(j, Quat(Q, 1, 1, 0, 0)), DomainError);
}

TEST_CASE("spectrum examples") {
  CHECK(spectrum_member(SeriesCase::Cub, 9));
  CHECK_FALSE(spectrum_member(SeriesCase::Cub, 6));
  CHECK(spectrum_member(SeriesCase::Ico, 11));
  CHECK_FALSE(spectrum_member(SeriesCase::Ico, 3));
  CHECK(spectrum_member(SeriesCase::Oct, 7));
  CHECK_FALSE(spectrum_member(SeriesCase::Oct, 3));
  const auto r = spectrum_representation(SeriesCase::Oct, 7);
  REQUIRE(r.has_value());
  CHECK(*r == std::vector<long>{3, 1});
  const auto s = spectrum_representation(SeriesCase::Ico, 11);
  REQUIRE(s.has_value());
  CHECK((*s)[0] * (*s)[0] + (*s)[0] * (*s)[1] - (*s)[1] * (*s)[1] == 11);
  std::vector<std::uint64_t> ico, oct;
  for (std::uint64_t m = 1; m <= 25; ++m) {
    if (spectrum_member(SeriesCase::Ico, m)) ico.push_back(m);
    if (spectrum_member(SeriesCase::Oct, m)) oct.push_back(m);
  }
  CHECK(ico == std::vector<std::uint64_t>{1, 4, 5, 9, 11, 16, 19, 20, 25});
  CHECK(oct == std::vector<std::uint64_t>{1, 2, 4, 7, 8, 9, 14, 16, 17, 18, 23, 25});
}

TEST_CASE("property: spectrum agrees with the series and with the representation search") {
  for (SeriesCase c : {SeriesCase::Cub, SeriesCase::Ico, SeriesCase::Oct}) {
    const CoeffSeries f = phi_coefficients(c, 500);
    for (std::uint64_t m = 1; m <= 500; ++m) {
      const bool member = spectrum_member(c, m);
      CHECK(member == (f(m) != 0));
      const auto rep = spectrum_representation(c, m);
      CHECK(member == rep.has_value());
      if (!rep) continue;
      const auto& v = *rep;
      long value = 0;
      switch (c) {
        case SeriesCase::Cub: value = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]; break;
        case SeriesCase::Ico: value = v[0] * v[0] + v[0] * v[1] - v[1] * v[1]; break;
        case SeriesCase::Oct: value = v[0] * v[0] - 2 * v[1] * v[1]; break;
      }
      CHECK(value == static_cast<long>(m));
    }
  }
}
