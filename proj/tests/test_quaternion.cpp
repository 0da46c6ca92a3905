#include "csl/error.hpp"
#include "csl/quaternion.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace csl;
using csl::testing::Gen;
using csl::testing::kTags;

namespace {

const FieldTag Q = FieldTag::Rational;

FieldElem fq(long a, long d = 1) { return FieldElem(Q, mpq_class(a, d)); }

Mat3K mat(FieldTag t, std::initializer_list<long> v) {
  Mat3K m(t);
  int idx = 0;
  for (long x : v) {
    m(idx / 3, idx % 3) = FieldElem(t, x);
    ++idx;
  }
  return m;
}

Vec3K vec3(FieldTag t, long a, long b, long c) { return {FieldElem(t, a), FieldElem(t, b), FieldElem(t, c)}; }

}  // namespace

TEST_CASE("Hamilton relations") {
  const Quat i = Quat::unit_i(Q), j = Quat::unit_j(Q), k = Quat::unit_k(Q);
  const Quat minus_one = Quat(Q, -1, 0, 0, 0);
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * i == minus_one);
  CHECK(i * j * k == minus_one);
  CHECK(Quat(Q, 1, 1, 0, 0) * Quat(Q, 1, -1, 0, 0) == Quat(Q, 2, 0, 0, 0));
  const Quat q(Q, 1, 2, -3, 4);
  CHECK(q * q.conj() == Quat::scalar(q.nr()));
  CHECK(q.nr() == fq(30));
  CHECK(q.tr() == fq(2));
}

TEST_CASE("cayley_matrix examples") {
  CHECK(cayley_matrix(Quat(Q, 1, 0, 0, 0)) == Mat3K::identity(Q));
  CHECK(cayley_matrix(Quat::unit_i(Q)) == mat(Q, {1, 0, 0, 0, -1, 0, 0, 0, -1}));
  const Mat3K cyc = cayley_matrix(Quat(Q, 1, 1, 1, 1));
  CHECK(cyc == mat(Q, {0, 0, 1, 1, 0, 0, 0, 1, 0}));
  CHECK(cyc.apply(vec3(Q, 1, 2, 3)) == vec3(Q, 3, 1, 2));
  CHECK_THROWS_AS(cayley_matrix(Quat(Q)), DomainError);
}

TEST_CASE("axis_angle examples") {
  const AxisAngle a = axis_angle(Quat::unit_i(Q));
  CHECK(a.axis == vec3(Q, 1, 0, 0));
  CHECK(a.cos_angle == fq(-1));
  const AxisAngle b = axis_angle(Quat(Q, 1, 1, 1, 1));
  CHECK(b.axis == vec3(Q, 1, 1, 1));
  CHECK(b.cos_angle == fq(-1, 2));
  const AxisAngle c = axis_angle(Quat(Q, 1, 1, 0, 0));
  CHECK(c.axis == vec3(Q, 1, 0, 0));
  CHECK(c.cos_angle == fq(0));
  CHECK_THROWS_AS(axis_angle(Quat(Q, 3, 0, 0, 0)), DomainError);
}

TEST_CASE("im_re") {
  const ReIm a = im_re(Quat(Q, 1, 2, 0, 0));
  CHECK(a.re == fq(1));
  CHECK(a.im == vec3(Q, 2, 0, 0));
  const Quat q(Q, {fq(1, 2), fq(1, 2), fq(1, 2), fq(1, 2)});
  const ReIm h = im_re(q);
  CHECK(h.re == fq(1, 2));
  CHECK(h.im == Vec3K{fq(1, 2), fq(1, 2), fq(1, 2)});
  const ReIm c = im_re(q.conj());
  CHECK(c.re == h.re);
  CHECK(c.im == Vec3K{fq(-1, 2), fq(-1, 2), fq(-1, 2)});
  CHECK(from_re_im(h.re, h.im) == q);
  CHECK(pure(h.im) + Quat::scalar(h.re) == q);
}

TEST_CASE("property: Cayley matrices lie in SO(3,K)") {
  Gen g(21);
  for (FieldTag t : kTags) {
    for (int n = 0; n < 1000; ++n) {
      const Mat3K r = cayley_matrix(g.nonzero_quat(t));
      CHECK(r.transpose() * r == Mat3K::identity(t));
      CHECK(r.det() == FieldElem::one(t));
      CHECK(is_special_orthogonal(r));
    }
  }
}

TEST_CASE("property: homomorphism, conjugation action and scale invariance") {
  Gen g(22);
  for (FieldTag t : kTags) {
    for (int n = 0; n < 300; ++n) {
      const Quat q = g.nonzero_quat(t);
      const Quat r = g.nonzero_quat(t);
      const Quat a = g.quat(t);
      CHECK(cayley_matrix(q * r) == cayley_matrix(q) * cayley_matrix(r));
      CHECK(im_re(q * a * q.inverse()).im == cayley_matrix(q).apply(im_re(a).im));
      CHECK(im_re(q * a * q.inverse()).re == im_re(a).re);
      CHECK(cayley_matrix(g.nonzero_field(t) * q) == cayley_matrix(q));
      CHECK((q * r).conj() == r.conj() * q.conj());
      CHECK((q * r).nr() == q.nr() * r.nr());
      CHECK((q * r) * a == q * (r * a));
      CHECK(q * q.inverse() == Quat::scalar(FieldElem::one(t)));
      if (!q.is_scalar()) {
        const AxisAngle aa = axis_angle(q);
        CHECK(cayley_matrix(q).trace() == FieldElem::one(t) + FieldElem(t, 2L) * aa.cos_angle);
        CHECK(cayley_matrix(q).apply(aa.axis) == aa.axis);
      }
    }
  }
}

TEST_CASE("rotation_to_quat inverts the Cayley map") {
  Gen g(23);
  for (FieldTag t : kTags) {
    for (int n = 0; n < 300; ++n) {
      const Quat q = g.nonzero_quat(t);
      const Quat p = rotation_to_quat(cayley_matrix(q));
      CHECK(cayley_matrix(p) == cayley_matrix(q));
      for (int c = 0; c < 4; ++c) CHECK(p[c].is_integral());
    }
  }
  CHECK_THROWS_AS(rotation_to_quat(mat(Q, {1, 0, 0, 0, 1, 0, 0, 0, -1})), DomainError);
  CHECK_THROWS_AS(rotation_to_quat(mat(Q, {2, 0, 0, 0, 1, 0, 0, 0, 1})), DomainError);
  // rotation by pi/4 about z has entries in Q(sqrt2) only
  const FieldTag r2 = FieldTag::RootTwo;
  const FieldElem h = FieldElem(r2, mpq_class(0), mpq_class(1, 2));
  Mat3K rot(r2);
  rot(0, 0) = h;
  rot(0, 1) = -h;
  rot(1, 0) = h;
  rot(1, 1) = h;
  rot(2, 2) = FieldElem::one(r2);
  const Quat p = rotation_to_quat(rot);
  CHECK(cayley_matrix(p) == rot);
  CHECK_THROWS_AS(rotation_to_quat(parse_matrix("0,-1,0; 1,0,0; 0,0,2", Q)), DomainError);
}

TEST_CASE("quaternion text round trip") {
  Gen g(24);
  for (FieldTag t : kTags) {
    for (int n = 0; n < 300; ++n) {
      const Quat q = g.quat(t, 7, 4);
      CHECK(parse_quat(to_string(q), t) == q);
    }
  }
  CHECK(parse_quat("2+1*i", Q) == Quat(Q, 2, 1, 0, 0));
  CHECK(parse_quat("(1+i+j+k)/2", Q) == Quat(Q, {fq(1, 2), fq(1, 2), fq(1, 2), fq(1, 2)}));
  CHECK(parse_quat("(1, 2, 3, 4)", Q) == Quat(Q, 1, 2, 3, 4));
  CHECK(parse_quat("i*j", Q) == Quat::unit_k(Q));
  const FieldTag r5 = FieldTag::RootFive;
  CHECK(parse_quat("(1 + w)*i - k", r5) ==
        Quat(r5, {FieldElem::zero(r5), FieldElem(r5, 1, 1), FieldElem::zero(r5), FieldElem(r5, -1L)}));
  CHECK_THROWS_AS(parse_quat("1 + q", Q), ParseError);
  CHECK_THROWS_AS(parse_quat("1/i", Q), ParseError);
  CHECK_THROWS_AS(parse_quat("(1,2,3)", Q), ParseError);
  CHECK(parse_matrix("[[0,0,1],[1,0,0],[0,1,0]]", Q) == mat(Q, {0, 0, 1, 1, 0, 0, 0, 1, 0}));
  CHECK(parse_matrix("0,0,1; 1,0,0; 0,1,0", Q) == mat(Q, {0, 0, 1, 1, 0, 0, 0, 1, 0}));
  CHECK_THROWS_AS(parse_matrix("1,2; 3,4", Q), ParseError);
}
