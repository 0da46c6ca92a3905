#include "csl/rings.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "csl/detail/expr.hpp"
#include "csl/error.hpp"

namespace csl {

namespace {

void check_same(FieldTag x, FieldTag y) {
  if (x != y) throw DomainError("field tag mismatch");
}

// Sign of p + r*sqrt(d) for rational p, r and non-square d > 1.
int sign_quadratic(const mpq_class& p, const mpq_class& r, int d) {
  const int sp = sgn(p);
  const int sr = sgn(r);
  if (sr == 0) return sp;
  if (sp == 0 || sp == sr) return sr;
  const mpq_class lhs = p * p;
  const mpq_class rhs = r * r * d;
  return lhs > rhs ? sp : sr;
}

// Rounds c/n to the nearest integer, halves rounded up.
mpz_class round_div(mpz_class c, mpz_class n) {
  if (sgn(n) < 0) {
    c = -c;
    n = -n;
  }
  mpz_class num = 2 * c + n;
  mpz_class den = 2 * n;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Multiplier with x / y = x * adjugate(y) / field_norm(y).
RingElem adjugate(const RingElem& y) {
  return y.tag() == FieldTag::Rational ? RingElem::one(y.tag()) : y.conj();
}

struct Candidate {
  RingElem multiplier;
  RingElem remainder;
};

Candidate best_remainder(const RingElem& x, const RingElem& y) {
  if (y.is_zero()) throw DomainError("division by zero");
  check_same(x.tag(), y.tag());
  const FieldTag tag = x.tag();
  const RingElem num = x * adjugate(y);
  const mpz_class n = y.field_norm();
  const mpz_class qa = round_div(num.a(), n);
  const mpz_class qb = tag == FieldTag::Rational ? mpz_class(0) : round_div(num.b(), n);

  const int span_b = tag == FieldTag::Rational ? 0 : 1;
  bool have = false;
  Candidate best;
  mpz_class best_norm;
  for (int da = -1; da <= 1; ++da) {
    for (int db = -span_b; db <= span_b; ++db) {
      RingElem t(tag, qa + da, qb + db);
      RingElem r = x - t * y;
      mpz_class nr = norm_abs(r);
      if (!have || nr < best_norm || (nr == best_norm && lex_less(best.remainder, r))) {
        best = {std::move(t), std::move(r)};
        best_norm = std::move(nr);
        have = true;
      }
    }
  }
  return best;
}

RingElem power(RingElem base, unsigned long e) {
  RingElem result = RingElem::one(base.tag());
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

}  // namespace

std::string_view to_string(FieldTag tag) {
  switch (tag) {
    case FieldTag::Rational: return "rational";
    case FieldTag::RootFive: return "root5";
    case FieldTag::RootTwo: return "root2";
  }
  return "?";
}

FieldTag parse_field_tag(std::string_view name) {
  if (name == "rational" || name == "q" || name == "Q") return FieldTag::Rational;
  if (name == "root5" || name == "r5" || name == "tau") return FieldTag::RootFive;
  if (name == "root2" || name == "r2" || name == "sqrt2") return FieldTag::RootTwo;
  throw ParseError("unknown field tag '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- RingElem

RingElem::RingElem(FieldTag tag, mpz_class a, mpz_class b)
    : tag_(tag), a_(std::move(a)), b_(std::move(b)) {
  if (tag_ == FieldTag::Rational && sgn(b_) != 0) {
    throw DomainError("rational ring element with nonzero w-coordinate");
  }
}

RingElem RingElem::omega(FieldTag tag) {
  if (tag == FieldTag::Rational) return one(tag);
  return RingElem(tag, 0L, 1L);
}

RingElem RingElem::conj() const {
  switch (tag_) {
    case FieldTag::Rational: return *this;
    case FieldTag::RootFive: return RingElem(tag_, a_ + b_, -b_);
    case FieldTag::RootTwo: return RingElem(tag_, a_, -b_);
  }
  return *this;
}

mpz_class RingElem::field_norm() const {
  switch (tag_) {
    case FieldTag::Rational: return a_;
    case FieldTag::RootFive: return a_ * a_ + a_ * b_ - b_ * b_;
    case FieldTag::RootTwo: return a_ * a_ - 2 * b_ * b_;
  }
  return 0;
}

mpz_class RingElem::trace() const {
  switch (tag_) {
    case FieldTag::Rational: return a_;
    case FieldTag::RootFive: return 2 * a_ + b_;
    case FieldTag::RootTwo: return 2 * a_;
  }
  return 0;
}

RingElem& RingElem::operator+=(const RingElem& o) {
  check_same(tag_, o.tag_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  check_same(tag_, o.tag_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
  check_same(tag_, o.tag_);
  switch (tag_) {
    case FieldTag::Rational:
      a_ *= o.a_;
      break;
    case FieldTag::RootFive: {
      const mpz_class bd = b_ * o.b_;
      mpz_class na = a_ * o.a_ + bd;
      mpz_class nb = a_ * o.b_ + b_ * o.a_ + bd;
      a_ = std::move(na);
      b_ = std::move(nb);
      break;
    }
    case FieldTag::RootTwo: {
      mpz_class na = a_ * o.a_ + 2 * b_ * o.b_;
      mpz_class nb = a_ * o.b_ + b_ * o.a_;
      a_ = std::move(na);
      b_ = std::move(nb);
      break;
    }
  }
  return *this;
}

RingElem& RingElem::operator*=(const mpz_class& k) {
  a_ *= k;
  b_ *= k;
  return *this;
}

bool lex_less(const RingElem& x, const RingElem& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

// --------------------------------------------------------------- FieldElem

FieldElem::FieldElem(FieldTag tag, mpq_class a, mpq_class b)
    : tag_(tag), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (tag_ == FieldTag::Rational && sgn(b_) != 0) {
    throw DomainError("rational field element with nonzero w-coordinate");
  }
}

FieldElem::FieldElem(const RingElem& x) : tag_(x.tag()), a_(x.a()), b_(x.b()) {}

bool FieldElem::is_integral() const {
  return a_.get_den() == 1 && b_.get_den() == 1;
}

RingElem FieldElem::to_ring() const {
  if (!is_integral()) throw DomainError("element " + to_string(*this) + " is not integral");
  return RingElem(tag_, a_.get_num(), b_.get_num());
}

mpz_class FieldElem::denominator() const {
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
  return d;
}

FieldElem FieldElem::conj() const {
  switch (tag_) {
    case FieldTag::Rational: return *this;
    case FieldTag::RootFive: return FieldElem(tag_, a_ + b_, -b_);
    case FieldTag::RootTwo: return FieldElem(tag_, a_, -b_);
  }
  return *this;
}

mpq_class FieldElem::field_norm() const {
  switch (tag_) {
    case FieldTag::Rational: return a_;
    case FieldTag::RootFive: return a_ * a_ + a_ * b_ - b_ * b_;
    case FieldTag::RootTwo: return a_ * a_ - 2 * b_ * b_;
  }
  return 0;
}

mpq_class FieldElem::trace() const {
  switch (tag_) {
    case FieldTag::Rational: return a_;
    case FieldTag::RootFive: return 2 * a_ + b_;
    case FieldTag::RootTwo: return 2 * a_;
  }
  return 0;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (tag_ == FieldTag::Rational) return FieldElem(tag_, 1 / a_);
  const mpq_class n = field_norm();
  FieldElem c = conj();
  return FieldElem(tag_, c.a_ / n, c.b_ / n);
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(tag_, o.tag_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(tag_, o.tag_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(tag_, o.tag_);
  switch (tag_) {
    case FieldTag::Rational:
      a_ *= o.a_;
      break;
    case FieldTag::RootFive: {
      const mpq_class bd = b_ * o.b_;
      mpq_class na = a_ * o.a_ + bd;
      mpq_class nb = a_ * o.b_ + b_ * o.a_ + bd;
      a_ = std::move(na);
      b_ = std::move(nb);
      break;
    }
    case FieldTag::RootTwo: {
      mpq_class na = a_ * o.a_ + 2 * b_ * o.b_;
      mpq_class nb = a_ * o.b_ + b_ * o.a_;
      a_ = std::move(na);
      b_ = std::move(nb);
      break;
    }
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem& FieldElem::operator*=(const mpq_class& k) {
  a_ *= k;
  b_ *= k;
  return *this;
}

// -------------------------------------------------------------- embeddings

int embedding_sign(const FieldElem& x, int which) {
  const mpq_class r = which == 0 ? x.b() : mpq_class(-x.b());
  switch (x.tag()) {
    case FieldTag::Rational: return sgn(x.a());
    case FieldTag::RootFive: return sign_quadratic(2 * x.a() + x.b(), r, 5);
    case FieldTag::RootTwo: return sign_quadratic(x.a(), r, 2);
  }
  return 0;
}

double embedding_value(const FieldElem& x, int which) {
  const double s = which == 0 ? 1.0 : -1.0;
  switch (x.tag()) {
    case FieldTag::Rational: return x.a().get_d();
    case FieldTag::RootFive: return x.a().get_d() + x.b().get_d() * (0.5 + s * 0.5 * std::sqrt(5.0));
    case FieldTag::RootTwo: return x.a().get_d() + x.b().get_d() * s * std::sqrt(2.0);
  }
  return 0.0;
}

bool is_totally_positive(const FieldElem& x) {
  if (embedding_sign(x, 0) <= 0) return false;
  return x.tag() == FieldTag::Rational || embedding_sign(x, 1) > 0;
}

// ---------------------------------------------------------------- division

mpz_class norm_abs(const RingElem& x) {
  mpz_class n = x.field_norm();
  return abs(n);
}

bool is_unit(const RingElem& x) { return norm_abs(x) == 1; }

DivMod euclid_divmod(const RingElem& x, const RingElem& y) {
  Candidate c = best_remainder(x, y);
  if (norm_abs(c.remainder) >= norm_abs(y)) {
    throw Error("Euclidean division failed to reduce the norm");
  }
  return {std::move(c.multiplier), std::move(c.remainder)};
}

RingElem reduction_multiplier(const RingElem& x, const RingElem& m) {
  return best_remainder(x, m).multiplier;
}

bool divides(const RingElem& y, const RingElem& x) {
  check_same(x.tag(), y.tag());
  if (y.is_zero()) return x.is_zero();
  const RingElem num = x * adjugate(y);
  const mpz_class n = y.field_norm();
  return mpz_divisible_p(num.a().get_mpz_t(), n.get_mpz_t()) != 0 &&
         mpz_divisible_p(num.b().get_mpz_t(), n.get_mpz_t()) != 0;
}

RingElem exact_quotient(const RingElem& x, const RingElem& y) {
  if (y.is_zero()) throw DomainError("division by zero");
  if (!divides(y, x)) throw DomainError(to_string(y) + " does not divide " + to_string(x));
  const RingElem num = x * adjugate(y);
  const mpz_class n = y.field_norm();
  mpz_class qa, qb;
  mpz_divexact(qa.get_mpz_t(), num.a().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(qb.get_mpz_t(), num.b().get_mpz_t(), n.get_mpz_t());
  return RingElem(x.tag(), qa, qb);
}

RingElem totally_positive_fundamental_unit(FieldTag tag) {
  switch (tag) {
    case FieldTag::Rational: return RingElem::one(tag);
    case FieldTag::RootFive: return RingElem(tag, 1L, 1L);  // tau^2 = 1 + tau
    case FieldTag::RootTwo: return RingElem(tag, 3L, 2L);
  }
  return RingElem::one(tag);
}

RingElem negative_norm_unit(FieldTag tag) {
  switch (tag) {
    case FieldTag::Rational: return RingElem(tag, -1L);
    case FieldTag::RootFive: return RingElem(tag, 0L, 1L);
    case FieldTag::RootTwo: return RingElem(tag, 1L, 1L);
  }
  return RingElem::one(tag);
}

Associate canonical_associate(const RingElem& x) {
  const FieldTag tag = x.tag();
  RingElem unit = RingElem::one(tag);
  if (x.is_zero()) return {x, unit};
  if (tag == FieldTag::Rational) {
    if (sgn(x.a()) < 0) return {-x, -unit};
    return {x, unit};
  }
  RingElem v = x;
  if (sgn(v.field_norm()) < 0) {
    const RingElem nu = negative_norm_unit(tag);
    v *= nu;
    unit *= nu;
  }
  if (embedding_sign(FieldElem(v), 0) < 0) {
    v = -v;
    unit = -unit;
  }
  // v is totally positive; sigma1(v) >= sigma2(v) iff b >= 0.  Multiplying by
  // eps scales the embedding ratio by eps^2.
  const RingElem eps = totally_positive_fundamental_unit(tag);
  const RingElem eps_inv = eps.conj();

  const double s1 = embedding_value(FieldElem(v), 0);
  const double s2 = embedding_value(FieldElem(v), 1);
  const double e1 = embedding_value(FieldElem(eps), 0);
  if (std::isfinite(s1) && std::isfinite(s2) && s1 > 0 && s2 > 0) {
    const double k = std::floor(std::log(s1 / s2) / (2 * std::log(e1)));
    if (std::abs(k) > 2 && std::abs(k) < 1e6) {
      const RingElem step = power(k > 0 ? eps_inv : eps, static_cast<unsigned long>(std::abs(k)));
      v *= step;
      unit *= step;
    }
  }
  for (;;) {
    RingElem w = v * eps_inv;
    if (sgn(w.b()) < 0) break;
    v = std::move(w);
    unit *= eps_inv;
  }
  while (sgn(v.b()) < 0) {
    v *= eps;
    unit *= eps;
  }
  return {std::move(v), std::move(unit)};
}

RingElem gcd(const RingElem& x, const RingElem& y) {
  check_same(x.tag(), y.tag());
  if (x.is_zero() && y.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  RingElem a = x;
  RingElem b = y;
  while (!b.is_zero()) {
    RingElem r = euclid_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return canonical_associate(a).value;
}

// ------------------------------------------------------------ factorisation

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string_view to_string(Splitting s) {
  switch (s) {
    case Splitting::Split: return "split";
    case Splitting::Inert: return "inert";
    case Splitting::Ramified: return "ramified";
  }
  return "?";
}

Splitting splitting_class(std::uint64_t p, FieldTag tag) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  switch (tag) {
    case FieldTag::Rational: return Splitting::Split;
    case FieldTag::RootFive:
      if (p == 5) return Splitting::Ramified;
      return (p % 5 == 1 || p % 5 == 4) ? Splitting::Split : Splitting::Inert;
    case FieldTag::RootTwo:
      if (p == 2) return Splitting::Ramified;
      return (p % 8 == 1 || p % 8 == 7) ? Splitting::Split : Splitting::Inert;
  }
  return Splitting::Inert;
}

std::vector<RingElem> primes_above(std::uint64_t p, FieldTag tag) {
  const Splitting s = splitting_class(p, tag);
  const mpz_class pz(std::to_string(p));
  if (tag == FieldTag::Rational || s == Splitting::Inert) return {RingElem(tag, pz)};
  if (s == Splitting::Ramified) {
    const RingElem root = tag == FieldTag::RootFive ? RingElem(tag, -1L, 2L) : RingElem(tag, 0L, 1L);
    return {canonical_associate(root).value};
  }
  // Root of the minimal polynomial of w modulo p, by scanning.
  std::uint64_t t = 0;
  for (; t < p; ++t) {
    const std::uint64_t sq = (t * t) % p;
    const std::uint64_t target = tag == FieldTag::RootFive ? (t + 1) % p : 2 % p;
    if (sq == target) break;
  }
  if (t == p) throw Error("no square root found for split prime");
  const RingElem w_minus_t = RingElem::omega(tag) - RingElem(tag, mpz_class(std::to_string(t)));
  RingElem pi = gcd(RingElem(tag, pz), w_minus_t);
  RingElem pi_bar = canonical_associate(pi.conj()).value;
  if (lex_less(pi_bar, pi)) std::swap(pi, pi_bar);
  return {pi, pi_bar};
}

Factorization factor(const RingElem& x) {
  if (x.is_zero()) throw DomainError("cannot factor zero");
  if (is_unit(x)) throw DomainError("cannot factor a unit");
  const mpz_class n = norm_abs(x);
  if (!n.fits_ulong_p()) throw ResourceError("norm too large to factor");
  Factorization out;
  RingElem v = x;
  for (const auto& [p, e] : factor_integer(n.get_ui())) {
    (void)e;
    for (const RingElem& pi : primes_above(p, x.tag())) {
      unsigned k = 0;
      while (divides(pi, v)) {
        v = exact_quotient(v, pi);
        ++k;
      }
      if (k > 0) out.primes.emplace_back(pi, k);
    }
  }
  if (!is_unit(v)) throw Error("factorisation left a non-unit cofactor");
  out.unit = std::move(v);
  return out;
}

std::vector<RingElem> ideals_of_norm(std::uint64_t m, FieldTag tag) {
  if (m == 0) throw DomainError("ideal norm must be positive");
  std::vector<RingElem> acc{RingElem::one(tag)};
  for (const auto& [p, e] : factor_integer(m)) {
    std::vector<RingElem> local;
    const auto primes = primes_above(p, tag);
    const Splitting s = tag == FieldTag::Rational ? Splitting::Ramified : splitting_class(p, tag);
    if (s == Splitting::Inert) {
      if (e % 2 != 0) return {};
      local.push_back(power(primes[0], e / 2));
    } else if (s == Splitting::Ramified || primes.size() == 1) {
      local.push_back(power(primes[0], e));
    } else {
      for (unsigned a = 0; a <= e; ++a) local.push_back(power(primes[0], a) * power(primes[1], e - a));
    }
    std::vector<RingElem> next;
    for (const auto& x : acc) {
      for (const auto& y : local) next.push_back(canonical_associate(x * y).value);
    }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end(), lex_less);
  return acc;
}

// ------------------------------------------------------------------- text

std::string to_string(const FieldElem& x) {
  if (x.is_rational()) return x.a().get_str();
  std::string w_term;
  const mpq_class ab = abs(x.b());
  if (ab == 1) {
    w_term = "w";
  } else {
    w_term = ab.get_str() + "*w";
  }
  if (sgn(x.a()) == 0) return sgn(x.b()) < 0 ? "-" + w_term : w_term;
  return x.a().get_str() + (sgn(x.b()) < 0 ? " - " : " + ") + w_term;
}

std::string to_string(const RingElem& x) { return to_string(FieldElem(x)); }

std::ostream& operator<<(std::ostream& os, const RingElem& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << to_string(x); }

FieldElem parse_field_elem(std::string_view text, FieldTag tag) {
  detail::ExprParser<FieldElem> parser(
      text, [tag](const mpz_class& n) { return FieldElem(tag, mpq_class(n)); },
      [tag](std::string_view name) -> std::optional<FieldElem> {
        if (tag == FieldTag::RootFive) {
          if (name == "w" || name == "tau") return FieldElem::omega(tag);
          if (name == "sqrt5") return FieldElem(tag, -1L, 2L);
        }
        if (tag == FieldTag::RootTwo && (name == "w" || name == "sqrt2")) return FieldElem::omega(tag);
        return std::nullopt;
      },
      [](const FieldElem& x, const FieldElem& y) {
        if (y.is_zero()) throw ParseError("division by zero");
        return x / y;
      });
  return parser.parse();
}

RingElem parse_ring_elem(std::string_view text, FieldTag tag) {
  const FieldElem x = parse_field_elem(text, tag);
  if (!x.is_integral()) throw ParseError("\"" + std::string(text) + "\" is not an algebraic integer");
  return x.to_ring();
}

}  // namespace csl
