#include "csl/csm.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "csl/detail/parallel.hpp"
#include "csl/error.hpp"

namespace csl {

namespace {

Vec3K vec(const FieldElem& a, const FieldElem& b, const FieldElem& c) { return {a, b, c}; }

Vec3K ivec(FieldTag t, long a, long b, long c) {
  return {FieldElem(t, a), FieldElem(t, b), FieldElem(t, c)};
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::uint64_t n, std::uint64_t& root) {
  root = isqrt(n);
  return root * root == n;
}

}  // namespace

OModule lattice(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Cubic: {
      const FieldTag t = FieldTag::Rational;
      return OModule::from_vec3(t, {ivec(t, 1, 0, 0), ivec(t, 0, 1, 0), ivec(t, 0, 0, 1)});
    }
    case LatticeKind::Fcc: {
      const FieldTag t = FieldTag::Rational;
      return OModule::from_vec3(t, {ivec(t, 1, 1, 0), ivec(t, 1, 0, 1), ivec(t, 0, 1, 1)});
    }
    case LatticeKind::Bcc: {
      const FieldTag t = FieldTag::Rational;
      const FieldElem h(t, mpq_class(1, 2));
      return OModule::from_vec3(t, {ivec(t, 1, 0, 0), ivec(t, 0, 1, 0), vec(h, h, h)});
    }
    case LatticeKind::ModuleB: {
      const FieldTag t = FieldTag::RootFive;
      const FieldElem tau = FieldElem::omega(t);
      return OModule::from_vec3(
          t, {ivec(t, 2, 0, 0), ivec(t, 1, 1, 1), vec(tau, FieldElem::zero(t), FieldElem::one(t))});
    }
    case LatticeKind::ModuleF: {
      const FieldTag t = FieldTag::RootFive;
      const FieldElem tau = FieldElem::omega(t);
      return OModule::from_vec3(
          t, {ivec(t, 2, 0, 0), vec(tau + FieldElem::one(t), tau, FieldElem::one(t)), ivec(t, 0, 0, 2)});
    }
  }
  throw DomainError("unknown lattice");
}

LatticeKind parse_lattice_kind(std::string_view name) {
  if (name == "cubic" || name == "z3") return LatticeKind::Cubic;
  if (name == "fcc") return LatticeKind::Fcc;
  if (name == "bcc") return LatticeKind::Bcc;
  if (name == "mb" || name == "module-b") return LatticeKind::ModuleB;
  if (name == "mf" || name == "module-f") return LatticeKind::ModuleF;
  throw ParseError("unknown lattice '" + std::string(name) + "'");
}

OModule gamma_of(const OrderBasis& o) { return im_project(o.module()); }

mpz_class sigma_index(const OrderBasis& o, const Quat& q) {
  if (q.is_zero()) throw DomainError("zero quaternion");
  const Quat r = o.reduce_generator(integral_multiple(q));
  return norm_abs(r.nr().to_ring());
}

CsmResult csm_bruteforce(const OModule& gamma, const Quat& q) {
  if (q.is_zero()) throw DomainError("zero quaternion");
  return csm_bruteforce(gamma, cayley_matrix(q));
}

CsmResult csm_bruteforce(const OModule& gamma, const Mat3K& rotation) {
  if (gamma.ambient() != Ambient::Im) throw DomainError("CSMs live in the pure-quaternion space");
  OModule csm = intersect(gamma, gamma.rotated(rotation));
  mpz_class sigma = index_K(gamma, csm).absolute();
  return {std::move(csm), std::move(sigma)};
}

CountResult count_csms(const OrderBasis& o, std::uint64_t m, const CountOptions& options) {
  if (options.workers == 0) throw DomainError("worker count must be positive");
  CountResult out;
  out.m = m;
  const std::vector<Quat> qs = enumerate_by_index(o, m, {options.cap, true});
  out.ideals = qs.size();
  const OModule gamma = gamma_of(o);

  std::vector<std::optional<CsmResult>> results(qs.size());
  detail::parallel_for(qs.size(), options.workers, [&](std::size_t t) { results[t] = csm_bruteforce(gamma, qs[t]); });

  std::map<std::string, CsmRecord> distinct;
  for (std::size_t t = 0; t < qs.size(); ++t) {
    distinct.try_emplace(results[t]->csm.key(), CsmRecord{qs[t], results[t]->csm, results[t]->sigma});
  }
  for (auto& [key, rec] : distinct) out.csms.push_back(std::move(rec));
  return out;
}

// ---------------------------------------------------------------- spectrum

std::string_view to_string(SeriesCase c) {
  switch (c) {
    case SeriesCase::Cub: return "cub";
    case SeriesCase::Ico: return "ico";
    case SeriesCase::Oct: return "oct";
  }
  return "?";
}

SeriesCase parse_series_case(std::string_view name) {
  if (name == "cub") return SeriesCase::Cub;
  if (name == "ico") return SeriesCase::Ico;
  if (name == "oct") return SeriesCase::Oct;
  throw ParseError("unknown case '" + std::string(name) + "'");
}

SeriesCase series_case_of(const OrderBasis& o) {
  switch (o.order_tag()) {
    case OrderTag::Hurwitz: return SeriesCase::Cub;
    case OrderTag::Icosian:
    case OrderTag::IcosianConj: return SeriesCase::Ico;
    case OrderTag::Octahedral: return SeriesCase::Oct;
    case OrderTag::Lipschitz: break;
  }
  throw DomainError("no coincidence series attached to " + o.name());
}

bool spectrum_member(SeriesCase c, std::uint64_t m) {
  if (m == 0) throw DomainError("index must be positive");
  for (const auto& [p, e] : factor_integer(m)) {
    switch (c) {
      case SeriesCase::Cub:
        if (p == 2) return false;
        break;
      case SeriesCase::Ico:
        if ((p % 5 == 2 || p % 5 == 3) && e % 2 != 0) return false;
        break;
      case SeriesCase::Oct:
        if ((p % 8 == 3 || p % 8 == 5) && e % 2 != 0) return false;
        break;
    }
  }
  return true;
}

std::optional<std::vector<long>> spectrum_representation(SeriesCase c, std::uint64_t m) {
  if (m == 0) throw DomainError("index must be positive");
  switch (c) {
    case SeriesCase::Cub: {
      if (m % 2 == 0) return std::nullopt;
      const std::uint64_t r = isqrt(m);
      for (std::uint64_t a = 0; a <= r; ++a) {
        for (std::uint64_t b = 0; b <= a && a * a + b * b <= m; ++b) {
          for (std::uint64_t cc = 0; cc <= b && a * a + b * b + cc * cc <= m; ++cc) {
            std::uint64_t d = 0;
            if (!is_square(m - a * a - b * b - cc * cc, d) || d > cc) continue;
            const std::uint64_t g = std::gcd(std::gcd(a, b), std::gcd(cc, d));
            if (g == 1) return std::vector<long>{static_cast<long>(a), static_cast<long>(b), static_cast<long>(cc),
                                                 static_cast<long>(d)};
          }
        }
      }
      return std::nullopt;
    }
    case SeriesCase::Ico: {
      // k^2 + k l - l^2 = m  <=>  (2k + l)^2 = 5 l^2 + 4m
      const std::uint64_t lmax = isqrt(m) + 1;
      for (std::uint64_t l = 0; l <= lmax; ++l) {
        std::uint64_t s = 0;
        if (!is_square(5 * l * l + 4 * m, s) || s < l || (s - l) % 2 != 0) continue;
        return std::vector<long>{static_cast<long>((s - l) / 2), static_cast<long>(l)};
      }
      return std::nullopt;
    }
    case SeriesCase::Oct: {
      const std::uint64_t lmax = 2 * isqrt(m) + 2;
      for (std::uint64_t l = 0; l <= lmax; ++l) {
        std::uint64_t k = 0;
        if (is_square(m + 2 * l * l, k)) return std::vector<long>{static_cast<long>(k), static_cast<long>(l)};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------- correspondence

CorrespondenceReport verify_ideal_correspondence(const OrderBasis& o, const Quat& q) {
  if (!o.is_reduced(q)) throw DomainError(to_string(q) + " is not reduced in " + o.name());
  const FieldTag tag = o.field();
  CorrespondenceReport rep;
  rep.norm = norm_abs(q.nr().to_ring());

  const OModule& ord = o.module();
  const OModule qo = right_ideal(o, q);
  const OModule oqbar = left_ideal(o, q.conj());
  const OModule eichler = intersect(ord, conjugated_order(o, q));

  const OModule im_e = im_project(eichler);
  rep.im_equal = im_e == im_project(qo) && im_e == im_project(oqbar);

  auto plus_scalars = [tag](const OModule& m) {
    std::vector<KVector> gens = m.basis();
    gens.push_back(to_vector(Quat::scalar(FieldElem::one(tag))));
    return OModule::from_generators(tag, Ambient::Quat, 4, gens);
  };
  rep.sum_equal = eichler == plus_scalars(qo) && eichler == plus_scalars(oqbar);

  try {
    rep.index_order = index_K(ord, eichler).absolute() == rep.norm;
    rep.index_ideal = index_K(eichler, qo).absolute() == rep.norm;
  } catch (const DomainError&) {
    // containment failed; the flags stay false
  }
  rep.scalar_part = scalar_intersect(qo) == canonical_associate(q.nr().to_ring()).value;
  return rep;
}

}  // namespace csl
