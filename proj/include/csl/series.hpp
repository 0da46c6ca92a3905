#pragma once

// Dirichlet series of the coincidence problem, all in the variable x = p^-s and
// indexed by m = N(nr q), i.e. by the square root of the ideal index:
//   Phi(s) = zeta_O^red(s/2),  zeta_O(s/2),  zeta_{O.O}(s/2),  zeta_K(s).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "csl/csm.hpp"

namespace csl {

enum class SeriesKind { Phi, ZetaK, ZetaO, ZetaOO };
std::string_view to_string(SeriesKind k);

using Poly = std::vector<std::int64_t>;

struct EulerFactor {
  std::uint64_t p = 0;
  Poly numerator;    // constant term 1
  Poly denominator;  // constant term 1
  /// Coefficients c_0..c_terms-1 of the power series numerator/denominator.
  std::vector<std::int64_t> expand(std::size_t terms) const;
};

/// Local factor at the rational prime p.  Throws DomainError for composite p.
EulerFactor euler_factor(SeriesCase c, std::uint64_t p, SeriesKind kind = SeriesKind::Phi);

struct CoeffSeries {
  std::string label;
  std::vector<std::int64_t> f;  // f[0] unused, f[1..M]
  std::size_t size() const { return f.empty() ? 0 : f.size() - 1; }
  std::int64_t operator()(std::size_t m) const { return f.at(m); }
};

/// Coefficients 1..M assembled multiplicatively from the Euler factors.
CoeffSeries series_coefficients(SeriesCase c, SeriesKind kind, std::size_t M);
CoeffSeries phi_coefficients(SeriesCase c, std::size_t M);

/// The single coefficient f(m), from the factorisation of m.
std::int64_t series_coefficient(SeriesCase c, SeriesKind kind, std::uint64_t m);

/// Dirichlet convolution and division (b[1] must be 1), truncated at M.
CoeffSeries dirichlet_mul(const CoeffSeries& a, const CoeffSeries& b);
CoeffSeries dirichlet_div(const CoeffSeries& a, const CoeffSeries& b);

/// zeta_K, zeta_O and zeta_{O.O} built from the Kronecker character of K
/// (divisor sums) instead of Euler factors.
CoeffSeries zeta_by_character(SeriesCase c, SeriesKind kind, std::size_t M);
/// Phi as the quotient zeta_O / zeta_{O.O} of the character-built series.
CoeffSeries phi_by_quotient(SeriesCase c, std::size_t M);

struct Summatory {
  std::int64_t F = 0;
  mpq_class ratio;  // F / (x^2 / 2)
  double ratio_value() const { return ratio.get_d(); }
};

/// F(x) = sum of f(m) for m <= x.
Summatory summatory(const CoeffSeries& s, std::size_t x);
Summatory summatory(SeriesCase c, std::size_t x);

/// The constant rho with F(x) ~ rho x^2 / 2.
double residue_rho(SeriesCase c);

/// zeta_O = Phi * zeta_{O.O} up to M; for cub also Phi (1 + 2^-s) zeta(2s) = zeta_J(s/2).
bool zeta_identity_check(SeriesCase c, std::size_t M);

}  // namespace csl
