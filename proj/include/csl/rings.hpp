#pragma once

// Exact arithmetic in Z, Z[tau] and Z[sqrt2] (tau = (1+sqrt5)/2) and in their
// fields of fractions.  Elements are stored as a + b*w in the integral basis
// {1, w}, with w = 1 (degenerate), tau or sqrt2 depending on the FieldTag.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csl {

enum class FieldTag { Rational, RootFive, RootTwo };

std::string_view to_string(FieldTag tag);
FieldTag parse_field_tag(std::string_view name);

/// Degree of the field over Q (1 or 2).
inline int degree(FieldTag tag) { return tag == FieldTag::Rational ? 1 : 2; }

/// Element a + b*w of the ring of integers.  For FieldTag::Rational, b == 0.
class RingElem {
 public:
  RingElem() = default;
  RingElem(FieldTag tag, mpz_class a, mpz_class b = 0);
  RingElem(FieldTag tag, long a, long b = 0) : RingElem(tag, mpz_class(a), mpz_class(b)) {}

  static RingElem zero(FieldTag tag) { return RingElem(tag, 0L); }
  static RingElem one(FieldTag tag) { return RingElem(tag, 1L); }
  /// The generator w of the integral basis.
  static RingElem omega(FieldTag tag);

  FieldTag tag() const { return tag_; }
  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// Galois conjugate: tau -> 1 - tau, sqrt2 -> -sqrt2.
  RingElem conj() const;
  /// Signed norm N_{K/Q}(x) = x * conj(x).
  mpz_class field_norm() const;
  /// Trace Tr_{K/Q}(x).
  mpz_class trace() const;

  RingElem operator-() const { return RingElem(tag_, -a_, -b_); }
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem& operator*=(const mpz_class& k);

  friend RingElem operator+(RingElem x, const RingElem& y) { return x += y; }
  friend RingElem operator-(RingElem x, const RingElem& y) { return x -= y; }
  friend RingElem operator*(RingElem x, const RingElem& y) { return x *= y; }
  friend RingElem operator*(RingElem x, const mpz_class& k) { return x *= k; }
  friend bool operator==(const RingElem& x, const RingElem& y) {
    return x.tag_ == y.tag_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const RingElem& x, const RingElem& y) { return !(x == y); }

 private:
  FieldTag tag_ = FieldTag::Rational;
  mpz_class a_ = 0;
  mpz_class b_ = 0;
};

/// Element a + b*w of K with rational coordinates.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldTag tag, mpq_class a, mpq_class b = 0);
  FieldElem(FieldTag tag, long a, long b = 0) : FieldElem(tag, mpq_class(a), mpq_class(b)) {}
  FieldElem(const RingElem& x);  // NOLINT(google-explicit-constructor): lossless embedding

  static FieldElem zero(FieldTag tag) { return FieldElem(tag, 0L); }
  static FieldElem one(FieldTag tag) { return FieldElem(tag, 1L); }
  static FieldElem omega(FieldTag tag) { return FieldElem(RingElem::omega(tag)); }

  FieldTag tag() const { return tag_; }
  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  /// True iff the element lies in the ring of integers.
  bool is_integral() const;
  /// Conversion to the ring of integers; throws DomainError if not integral.
  RingElem to_ring() const;
  /// Least positive integer d with d*x integral.
  mpz_class denominator() const;

  FieldElem conj() const;
  mpq_class field_norm() const;
  mpq_class trace() const;
  FieldElem inverse() const;

  FieldElem operator-() const { return FieldElem(tag_, -a_, -b_); }
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  FieldElem& operator*=(const mpq_class& k);

  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
  friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }
  friend FieldElem operator*(FieldElem x, const mpq_class& k) { return x *= k; }
  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.tag_ == y.tag_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

 private:
  FieldTag tag_ = FieldTag::Rational;
  mpq_class a_ = 0;
  mpq_class b_ = 0;
};

/// Sign (-1, 0, 1) of the image of x under the real embedding w -> w
/// (which = 0) or w -> conj(w) (which = 1).
int embedding_sign(const FieldElem& x, int which);
/// Floating-point value of x under the chosen embedding.
double embedding_value(const FieldElem& x, int which);

bool is_totally_positive(const FieldElem& x);

/// |N_{K/Q}(x)|; for FieldTag::Rational this is |x|.
mpz_class norm_abs(const RingElem& x);
bool is_unit(const RingElem& x);

struct DivMod {
  RingElem quotient;
  RingElem remainder;
};

/// Euclidean division x = q*y + r with norm_abs(r) < norm_abs(y).
DivMod euclid_divmod(const RingElem& x, const RingElem& y);

/// Canonical representative of the coset x + m*O: the remainder of minimal
/// norm among the nine candidates around the rounded quotient, ties broken
/// toward the lexicographically larger (a, b).  Returns the multiplier t
/// such that the representative equals x - t*m.
RingElem reduction_multiplier(const RingElem& x, const RingElem& m);

/// x / y when y divides x, or nothing otherwise.
bool divides(const RingElem& y, const RingElem& x);
RingElem exact_quotient(const RingElem& x, const RingElem& y);

struct Associate {
  RingElem value;  // canonical associate, equals input * unit
  RingElem unit;
};

/// Canonical associate: positive in Z; in the quadratic rings the unique
/// totally positive associate whose embedding ratio lies in [1, eps^2),
/// eps = tau^2 resp. 3 + 2*sqrt2.  Zero maps to itself.
Associate canonical_associate(const RingElem& x);

/// The fundamental totally positive unit (tau^2, 3 + 2*sqrt2; 1 over Z).
RingElem totally_positive_fundamental_unit(FieldTag tag);
/// A unit of norm -1 (tau, 1 + sqrt2; -1 over Z).
RingElem negative_norm_unit(FieldTag tag);

/// Canonical generator of x*O + y*O.  Throws DomainError for gcd(0, 0).
RingElem gcd(const RingElem& x, const RingElem& y);

enum class Splitting { Split, Inert, Ramified };
std::string_view to_string(Splitting s);

/// How the rational prime p decomposes in the ring of integers.
Splitting splitting_class(std::uint64_t p, FieldTag tag);

/// Canonical primes of the ring lying over the rational prime p.
std::vector<RingElem> primes_above(std::uint64_t p, FieldTag tag);

struct Factorization {
  RingElem unit;
  std::vector<std::pair<RingElem, unsigned>> primes;  // canonical primes
};

/// x = unit * prod(prime^exp).  Throws DomainError for zero or unit input.
Factorization factor(const RingElem& x);

/// Canonical generators of all ideals of absolute norm m, in lexicographic
/// order.  Over Z this is {m}.
std::vector<RingElem> ideals_of_norm(std::uint64_t m, FieldTag tag);

/// Trial-division factorisation of a positive integer.
std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Text: "a", "a + b*w" with rational coordinates; w means tau resp. sqrt2.
std::string to_string(const RingElem& x);
std::string to_string(const FieldElem& x);
std::ostream& operator<<(std::ostream& os, const RingElem& x);
std::ostream& operator<<(std::ostream& os, const FieldElem& x);

/// Parses a scalar expression such as "3/2 - 1/2*w", "(1+tau)/2" or "sqrt2".
/// Throws ParseError.
FieldElem parse_field_elem(std::string_view text, FieldTag tag);
RingElem parse_ring_elem(std::string_view text, FieldTag tag);

/// Lexicographic order on (a, b); used for deterministic tie-breaks.
bool lex_less(const RingElem& x, const RingElem& y);

}  // namespace csl
