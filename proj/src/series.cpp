#include "csl/series.hpp"

#include <cmath>
#include <numbers>

#include "csl/error.hpp"

namespace csl {

namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("series coefficient overflows 64 bits");
  return r;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("series coefficient overflows 64 bits");
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add_checked(out[i + j], mul_checked(a[i], b[j]));
  }
  return out;
}

// x -> p*x
Poly scale_var(const Poly& a, std::int64_t p) {
  Poly out(a);
  std::int64_t pk = 1;
  for (auto& c : out) {
    c = mul_checked(c, pk);
    pk = mul_checked(pk, p);
  }
  return out;
}

// x -> x^2
Poly square_var(const Poly& a) {
  Poly out(2 * a.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[2 * i] = a[i];
  return out;
}

Poly zeta_k_local(SeriesCase c, std::uint64_t p) {
  if (c == SeriesCase::Cub) return {1, -1};
  const FieldTag tag = c == SeriesCase::Ico ? FieldTag::RootFive : FieldTag::RootTwo;
  switch (splitting_class(p, tag)) {
    case Splitting::Split: return {1, -2, 1};
    case Splitting::Inert: return {1, 0, -1};
    case Splitting::Ramified: return {1, -1};
  }
  return {1};
}

std::vector<std::uint64_t> smallest_prime_factors(std::size_t M) {
  std::vector<std::uint64_t> spf(M + 1, 0);
  for (std::size_t i = 2; i <= M; ++i) {
    if (spf[i] != 0) continue;
    for (std::size_t j = i; j <= M; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

int kronecker(SeriesCase c, std::uint64_t d) {
  switch (c) {
    case SeriesCase::Cub: return 0;
    case SeriesCase::Ico: {
      const auto r = d % 5;
      if (r == 0) return 0;
      return (r == 1 || r == 4) ? 1 : -1;
    }
    case SeriesCase::Oct: {
      const auto r = d % 8;
      if (r % 2 == 0) return 0;
      return (r == 1 || r == 7) ? 1 : -1;
    }
  }
  return 0;
}

CoeffSeries make_series(std::string label, std::size_t M) {
  CoeffSeries s;
  s.label = std::move(label);
  s.f.assign(M + 1, 0);
  return s;
}

CoeffSeries sparse(std::string label, std::size_t M, std::initializer_list<std::pair<std::size_t, std::int64_t>> terms) {
  CoeffSeries s = make_series(std::move(label), M);
  for (const auto& [n, v] : terms) {
    if (n <= M) s.f[n] = v;
  }
  return s;
}

std::string label_of(SeriesCase c, SeriesKind k) {
  return std::string(to_string(k)) + "/" + std::string(to_string(c));
}

}  // namespace

std::string_view to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::Phi: return "phi";
    case SeriesKind::ZetaK: return "zetaK";
    case SeriesKind::ZetaO: return "zetaO";
    case SeriesKind::ZetaOO: return "zetaOO";
  }
  return "?";
}

std::vector<std::int64_t> EulerFactor::expand(std::size_t terms) const {
  std::vector<std::int64_t> c(terms, 0);
  for (std::size_t r = 0; r < terms; ++r) {
    std::int64_t v = r < numerator.size() ? numerator[r] : 0;
    for (std::size_t k = 1; k <= r && k < denominator.size(); ++k) {
      v = add_checked(v, -mul_checked(denominator[k], c[r - k]));
    }
    c[r] = v;
  }
  return c;
}

EulerFactor euler_factor(SeriesCase c, std::uint64_t p, SeriesKind kind) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const auto ps = static_cast<std::int64_t>(p);
  EulerFactor e;
  e.p = p;
  const bool hurwitz_two = c == SeriesCase::Cub && p == 2;
  switch (kind) {
    case SeriesKind::ZetaK:
      e.numerator = {1};
      e.denominator = zeta_k_local(c, p);
      break;
    case SeriesKind::ZetaO: {
      const Poly d = zeta_k_local(c, p);
      e.numerator = hurwitz_two ? Poly{1, -2} : Poly{1};
      e.denominator = poly_mul(d, scale_var(d, ps));
      break;
    }
    case SeriesKind::ZetaOO:
      e.numerator = hurwitz_two ? Poly{1, 1} : Poly{1};
      e.denominator = square_var(zeta_k_local(c, p));
      break;
    case SeriesKind::Phi: {
      if (hurwitz_two) {
        e.numerator = {1};
        e.denominator = {1};
        break;
      }
      Splitting s = Splitting::Ramified;
      if (c != SeriesCase::Cub) {
        s = splitting_class(p, c == SeriesCase::Ico ? FieldTag::RootFive : FieldTag::RootTwo);
      }
      switch (s) {
        case Splitting::Ramified:
          e.numerator = {1, 1};
          e.denominator = {1, -ps};
          break;
        case Splitting::Split:
          e.numerator = {1, 2, 1};
          e.denominator = {1, -2 * ps, mul_checked(ps, ps)};
          break;
        case Splitting::Inert:
          e.numerator = {1, 0, 1};
          e.denominator = {1, 0, -mul_checked(ps, ps)};
          break;
      }
      break;
    }
  }
  return e;
}

CoeffSeries series_coefficients(SeriesCase c, SeriesKind kind, std::size_t M) {
  CoeffSeries s = make_series(label_of(c, kind), M);
  if (M == 0) return s;
  s.f[1] = 1;
  const auto spf = smallest_prime_factors(M);
  std::vector<std::vector<std::int64_t>> local(M + 1);
  for (std::size_t p = 2; p <= M; ++p) {
    if (spf[p] != p) continue;
    std::size_t terms = 1;
    for (std::size_t q = p; q <= M; q *= p) {
      ++terms;
      if (q > M / p) break;
    }
    local[p] = euler_factor(c, p, kind).expand(terms);
  }
  for (std::size_t n = 2; n <= M; ++n) {
    const std::size_t p = spf[n];
    std::size_t rest = n;
    std::size_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    s.f[n] = mul_checked(s.f[rest], local[p][e]);
  }
  return s;
}

CoeffSeries phi_coefficients(SeriesCase c, std::size_t M) { return series_coefficients(c, SeriesKind::Phi, M); }

std::int64_t series_coefficient(SeriesCase c, SeriesKind kind, std::uint64_t m) {
  if (m == 0) throw DomainError("coefficients are indexed from 1");
  std::int64_t f = 1;
  for (const auto& [p, e] : factor_integer(m)) f = mul_checked(f, euler_factor(c, p, kind).expand(e + 1)[e]);
  return f;
}

CoeffSeries dirichlet_mul(const CoeffSeries& a, const CoeffSeries& b) {
  const std::size_t M = std::min(a.size(), b.size());
  CoeffSeries out = make_series("(" + a.label + ")*(" + b.label + ")", M);
  for (std::size_t d = 1; d <= M; ++d) {
    if (a.f[d] == 0) continue;
    for (std::size_t e = 1; d * e <= M; ++e) {
      if (b.f[e] != 0) out.f[d * e] = add_checked(out.f[d * e], mul_checked(a.f[d], b.f[e]));
    }
  }
  return out;
}

CoeffSeries dirichlet_div(const CoeffSeries& a, const CoeffSeries& b) {
  const std::size_t M = std::min(a.size(), b.size());
  if (M >= 1 && b.f[1] != 1) throw DomainError("Dirichlet division needs a divisor with leading coefficient 1");
  CoeffSeries out = make_series("(" + a.label + ")/(" + b.label + ")", M);
  // out * b = a, solved for out[n] in increasing n
  std::vector<std::int64_t> acc(M + 1, 0);
  for (std::size_t n = 1; n <= M; ++n) {
    out.f[n] = add_checked(a.f[n], -acc[n]);
    if (out.f[n] == 0) continue;
    for (std::size_t e = 2; n * e <= M; ++e) {
      if (b.f[e] != 0) acc[n * e] = add_checked(acc[n * e], mul_checked(out.f[n], b.f[e]));
    }
  }
  return out;
}

CoeffSeries zeta_by_character(SeriesCase c, SeriesKind kind, std::size_t M) {
  CoeffSeries ak = make_series(label_of(c, SeriesKind::ZetaK), M);
  for (std::size_t d = 1; d <= M; ++d) {
    const std::int64_t chi = c == SeriesCase::Cub ? (d == 1 ? 1 : 0) : kronecker(c, d);
    if (chi == 0) continue;
    for (std::size_t n = d; n <= M; n += d) ak.f[n] += chi;
  }
  switch (kind) {
    case SeriesKind::Phi:
      return phi_by_quotient(c, M);
    case SeriesKind::ZetaK:
      return ak;
    case SeriesKind::ZetaO: {
      CoeffSeries shifted = ak;
      for (std::size_t n = 1; n <= M; ++n) shifted.f[n] = mul_checked(ak.f[n], static_cast<std::int64_t>(n));
      CoeffSeries out = dirichlet_mul(ak, shifted);
      if (c == SeriesCase::Cub) out = dirichlet_mul(out, sparse("1-2^(1-s)", M, {{1, 1}, {2, -2}}));
      out.label = label_of(c, kind);
      return out;
    }
    case SeriesKind::ZetaOO: {
      CoeffSeries out = make_series(label_of(c, kind), M);
      for (std::size_t n = 1; n * n <= M; ++n) out.f[n * n] = ak.f[n];
      if (c == SeriesCase::Cub) out = dirichlet_mul(out, sparse("1+2^-s", M, {{1, 1}, {2, 1}}));
      out.label = label_of(c, kind);
      return out;
    }
  }
  return ak;
}

CoeffSeries phi_by_quotient(SeriesCase c, std::size_t M) {
  CoeffSeries out =
      dirichlet_div(zeta_by_character(c, SeriesKind::ZetaO, M), zeta_by_character(c, SeriesKind::ZetaOO, M));
  out.label = label_of(c, SeriesKind::Phi);
  return out;
}

Summatory summatory(const CoeffSeries& s, std::size_t x) {
  if (x == 0 || x > s.size()) throw DomainError("summatory bound outside the coefficient range");
  Summatory out;
  for (std::size_t m = 1; m <= x; ++m) out.F = add_checked(out.F, s.f[m]);
  const mpz_class xx(std::to_string(x));
  out.ratio = mpq_class(2 * mpz_class(std::to_string(out.F)), xx * xx);
  out.ratio.canonicalize();
  return out;
}

Summatory summatory(SeriesCase c, std::size_t x) { return summatory(phi_coefficients(c, x), x); }

double residue_rho(SeriesCase c) {
  using std::numbers::pi;
  const double pi4 = pi * pi * pi * pi;
  switch (c) {
    case SeriesCase::Cub: return 6.0 / (pi * pi);
    case SeriesCase::Ico: return 45.0 * std::sqrt(5.0) * std::log(std::numbers::phi) / pi4;
    case SeriesCase::Oct: return 720.0 * std::sqrt(2.0) * std::log(1.0 + std::sqrt(2.0)) / (11.0 * pi4);
  }
  return 0.0;
}

bool zeta_identity_check(SeriesCase c, std::size_t M) {
  const CoeffSeries phi = phi_coefficients(c, M);
  const CoeffSeries zo = zeta_by_character(c, SeriesKind::ZetaO, M);
  const CoeffSeries zoo = zeta_by_character(c, SeriesKind::ZetaOO, M);
  if (dirichlet_mul(phi, zoo).f != zo.f) return false;
  if (series_coefficients(c, SeriesKind::ZetaO, M).f != zo.f) return false;
  if (series_coefficients(c, SeriesKind::ZetaOO, M).f != zoo.f) return false;
  if (phi_by_quotient(c, M).f != phi.f) return false;
  if (c == SeriesCase::Cub) {
    // zeta_J(s/2) = (1 - 2^(1-s)) zeta(s) zeta(s-1) has coefficients sigma(n) - 2 sigma(n/2).
    std::vector<std::int64_t> sigma(M + 1, 0);
    for (std::size_t d = 1; d <= M; ++d) {
      for (std::size_t n = d; n <= M; n += d) sigma[n] += static_cast<std::int64_t>(d);
    }
    CoeffSeries zj = make_series("zetaJ", M);
    for (std::size_t n = 1; n <= M; ++n) zj.f[n] = sigma[n] - (n % 2 == 0 ? 2 * sigma[n / 2] : 0);
    CoeffSeries zeta2s = make_series("zeta(2s)", M);
    for (std::size_t n = 1; n * n <= M; ++n) zeta2s.f[n * n] = 1;
    const CoeffSeries lhs = dirichlet_mul(dirichlet_mul(phi, sparse("1+2^-s", M, {{1, 1}, {2, 1}})), zeta2s);
    if (lhs.f != zj.f) return false;
  }
  return true;
}

}  // namespace csl
