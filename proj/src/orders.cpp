#include "csl/orders.hpp"

#include <cmath>
#include <cstdint>
#include <map>

#include "csl/error.hpp"

namespace csl {

namespace {

Quat half(FieldTag tag, const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  const mpq_class h(1, 2);
  return Quat(tag, {a * h, b * h, c * h, d * h});
}

FieldElem dot(const Quat& x, const Quat& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw ResourceError("trace form entry exceeds 64 bits");
  return z.get_si();
}

// Positive definite integral quadratic forms on the Z-basis of an order:
// forms[0](c) = Tr(nr q), forms[1](c) = Tr(w nr q), scaled to integers.
struct TraceLattice {
  std::vector<Quat> zbasis;
  std::vector<std::vector<std::vector<std::int64_t>>> forms;
  std::vector<mpq_class> scale;
  std::vector<double> diag;
  std::vector<std::vector<double>> mu;
};

TraceLattice build_trace_lattice(const OrderBasis& o) {
  const FieldTag tag = o.field();
  TraceLattice t;
  for (const auto& b : o.module().basis()) t.zbasis.push_back(quat_from_vector(b));
  if (degree(tag) == 2) {
    const FieldElem w = FieldElem::omega(tag);
    const std::size_t half_n = t.zbasis.size();
    for (std::size_t i = 0; i < half_n; ++i) t.zbasis.push_back(t.zbasis[i] * w);
  }
  const std::size_t n = t.zbasis.size();
  std::vector<std::vector<FieldElem>> inner(n, std::vector<FieldElem>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) inner[k][l] = dot(t.zbasis[k], t.zbasis[l]);
  }
  const int nforms = degree(tag);
  std::vector<std::vector<mpq_class>> gram0(n, std::vector<mpq_class>(n));
  for (int f = 0; f < nforms; ++f) {
    const FieldElem mult = f == 0 ? FieldElem::one(tag) : FieldElem::omega(tag);
    std::vector<std::vector<mpq_class>> g(n, std::vector<mpq_class>(n));
    mpz_class den = 1;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        g[k][l] = (inner[k][l] * mult).trace();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g[k][l].get_den_mpz_t());
      }
    }
    std::vector<std::vector<std::int64_t>> gi(n, std::vector<std::int64_t>(n));
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        const mpq_class v = g[k][l] * den;
        gi[k][l] = to_i64(v.get_num());
      }
    }
    t.forms.push_back(std::move(gi));
    t.scale.emplace_back(den);
    if (f == 0) gram0 = g;
  }
  // Exact LDL^T of the trace form: T(c) = sum_i d_i (c_i + sum_{j>i} mu_ij c_j)^2.
  std::vector<std::vector<mpq_class>> q = gram0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const mpq_class f = q[i][j] / q[i][i];
      for (std::size_t k = j; k < n; ++k) q[j][k] -= f * q[i][k];
    }
  }
  t.diag.assign(n, 0.0);
  t.mu.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(q[i][i]) <= 0) throw Error("trace form is not positive definite");
    t.diag[i] = q[i][i].get_d();
    for (std::size_t j = i + 1; j < n; ++j) {
      const mpq_class m = q[i][j] / q[i][i];
      t.mu[i][j] = m.get_d();
    }
  }
  return t;
}

std::int64_t eval_form(const std::vector<std::vector<std::int64_t>>& g, const std::vector<std::int64_t>& c) {
  std::int64_t s = 0;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (c[k] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t l = 0; l < n; ++l) row += g[k][l] * c[l];
    s += c[k] * row;
  }
  return s;
}

class PointSearch {
 public:
  PointSearch(const TraceLattice& lat, const std::vector<std::int64_t>& targets, double bound)
      : lat_(lat), targets_(targets), bound_(bound), c_(lat.zbasis.size(), 0) {}

  template <class Visit>
  void run(Visit&& visit) {
    if (!c_.empty()) descend(c_.size() - 1, 0.0, visit);
  }

 private:
  template <class Visit>
  void descend(std::size_t i, double partial, Visit& visit) {
    const std::size_t n = c_.size();
    double center = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) center -= lat_.mu[i][j] * static_cast<double>(c_[j]);
    const double rem = bound_ - partial;
    if (rem < 0) return;
    const double r = std::sqrt(rem / lat_.diag[i]);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - r - 1e-9));
    const auto hi = static_cast<std::int64_t>(std::floor(center + r + 1e-9));
    for (std::int64_t v = lo; v <= hi; ++v) {
      const double d = static_cast<double>(v) - center;
      const double np = partial + lat_.diag[i] * d * d;
      if (np > bound_) continue;
      c_[i] = v;
      if (i == 0) {
        leaf(visit);
      } else {
        descend(i - 1, np, visit);
      }
    }
    c_[i] = 0;
  }

  template <class Visit>
  void leaf(Visit& visit) {
    for (std::size_t f = 0; f < targets_.size(); ++f) {
      if (eval_form(lat_.forms[f], c_) != targets_[f]) return;
    }
    visit(c_);
  }

  const TraceLattice& lat_;
  const std::vector<std::int64_t>& targets_;
  double bound_;
  std::vector<std::int64_t> c_;
};

}  // namespace

// ------------------------------------------------------------- OrderBasis

OrderBasis::OrderBasis(OrderTag ot, FieldTag ft, std::vector<Quat> basis)
    : order_tag_(ot), field_(ft), basis_(std::move(basis)), module_(OModule::from_quats(ft, basis_)) {}

OrderBasis OrderBasis::hurwitz() {
  const FieldTag t = FieldTag::Rational;
  const FieldElem one = FieldElem::one(t);
  return OrderBasis(OrderTag::Hurwitz, t,
                    {Quat(t, 1, 0, 0, 0), Quat(t, 0, 1, 0, 0), Quat(t, 0, 0, 1, 0), half(t, one, one, one, one)});
}

OrderBasis OrderBasis::icosian() {
  const FieldTag t = FieldTag::RootFive;
  const FieldElem one = FieldElem::one(t);
  const FieldElem zero = FieldElem::zero(t);
  const FieldElem tau = FieldElem::omega(t);
  return OrderBasis(OrderTag::Icosian, t,
                    {Quat(t, 1, 0, 0, 0), Quat(t, 0, 1, 0, 0), half(t, one, one, one, one),
                     half(t, one - tau, tau, zero, one)});
}

OrderBasis OrderBasis::icosian_conj() {
  const FieldTag t = FieldTag::RootFive;
  const FieldElem one = FieldElem::one(t);
  const FieldElem zero = FieldElem::zero(t);
  const FieldElem tau = FieldElem::omega(t);
  return OrderBasis(OrderTag::IcosianConj, t,
                    {Quat(t, 1, 0, 0, 0), Quat(t, 0, 1, 0, 0), half(t, one, one, one, one),
                     half(t, tau, one - tau, zero, one)});
}

OrderBasis OrderBasis::octahedral() {
  const FieldTag t = FieldTag::RootTwo;
  const FieldElem one = FieldElem::one(t);
  const FieldElem zero = FieldElem::zero(t);
  const FieldElem r = FieldElem::omega(t).inverse();  // 1/sqrt2
  return OrderBasis(OrderTag::Octahedral, t,
                    {Quat(t, 1, 0, 0, 0), Quat(t, {r, r, zero, zero}), Quat(t, {r, zero, r, zero}),
                     half(t, one, one, one, one)});
}

OrderBasis OrderBasis::lipschitz(FieldTag tag) {
  return OrderBasis(OrderTag::Lipschitz, tag,
                    {Quat(tag, 1, 0, 0, 0), Quat(tag, 0, 1, 0, 0), Quat(tag, 0, 0, 1, 0), Quat(tag, 0, 0, 0, 1)});
}

OrderBasis OrderBasis::from_name(std::string_view name) {
  if (name == "hurwitz") return hurwitz();
  if (name == "icosian") return icosian();
  if (name == "icosian-conj") return icosian_conj();
  if (name == "octahedral") return octahedral();
  if (name == "lipschitz-q") return lipschitz(FieldTag::Rational);
  if (name == "lipschitz-r5") return lipschitz(FieldTag::RootFive);
  if (name == "lipschitz-r2") return lipschitz(FieldTag::RootTwo);
  throw ParseError("unknown order '" + std::string(name) + "'");
}

std::string OrderBasis::name() const {
  switch (order_tag_) {
    case OrderTag::Hurwitz: return "hurwitz";
    case OrderTag::Icosian: return "icosian";
    case OrderTag::IcosianConj: return "icosian-conj";
    case OrderTag::Octahedral: return "octahedral";
    case OrderTag::Lipschitz:
      switch (field_) {
        case FieldTag::Rational: return "lipschitz-q";
        case FieldTag::RootFive: return "lipschitz-r5";
        case FieldTag::RootTwo: return "lipschitz-r2";
      }
  }
  return "?";
}

bool OrderBasis::contains(const Quat& q) const {
  if (q.tag() != field_) throw DomainError("field tag mismatch");
  return module_.contains(q);
}

void OrderBasis::require_member(const Quat& q) const {
  if (!contains(q)) throw DomainError(to_string(q) + " is not in " + name());
}

RingElem OrderBasis::content(const Quat& q) const {
  if (q.is_zero()) throw DomainError("content of zero");
  require_member(q);
  RingElem g = RingElem::zero(field_);
  for (const auto& x : module_.coords(to_vector(q))) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? canonical_associate(x.to_ring()).value : gcd(g, x.to_ring());
  }
  return g;
}

bool OrderBasis::is_unit(const Quat& q) const {
  require_member(q);
  return !q.is_zero() && csl::is_unit(q.nr().to_ring());
}

bool OrderBasis::is_reduced(const Quat& q) const {
  if (!is_maximal()) throw DomainError("reducedness is defined for the maximal orders only");
  if (!csl::is_unit(content(q))) return false;
  if (order_tag_ == OrderTag::Hurwitz) return mpz_odd_p(norm_abs(q.nr().to_ring()).get_mpz_t()) != 0;
  return true;
}

Quat OrderBasis::reduce_generator(const Quat& q) const {
  Quat r = q * FieldElem(content(q)).inverse();
  if (order_tag_ == OrderTag::Hurwitz) {
    const Quat strip = half(field_, FieldElem::one(field_), -FieldElem::one(field_), FieldElem::zero(field_),
                            FieldElem::zero(field_));  // (1+i)^-1 = (1-i)/2
    while (mpz_even_p(norm_abs(r.nr().to_ring()).get_mpz_t()) != 0) {
      r = r * strip;
      r *= FieldElem(content(r)).inverse();
    }
  }
  return r;
}

// ---------------------------------------------------------------- ideals

OModule right_ideal(const OrderBasis& o, const Quat& q) {
  std::vector<Quat> gens;
  for (const auto& b : o.basis()) gens.push_back(q * b);
  return OModule::from_quats(o.field(), gens);
}

OModule left_ideal(const OrderBasis& o, const Quat& q) {
  std::vector<Quat> gens;
  for (const auto& b : o.basis()) gens.push_back(b * q);
  return OModule::from_quats(o.field(), gens);
}

OModule conjugated_order(const OrderBasis& o, const Quat& q) {
  const Quat inv = q.inverse();
  std::vector<Quat> gens;
  for (const auto& b : o.basis()) gens.push_back(q * b * inv);
  return OModule::from_quats(o.field(), gens);
}

Quat integral_multiple(const Quat& q) {
  mpz_class d = 1;
  for (const auto& x : q.coords()) {
    const mpz_class dx = x.denominator();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), dx.get_mpz_t());
  }
  return q * FieldElem(q.tag(), mpq_class(d));
}

RingElem balanced_associate(const RingElem& nu) {
  const FieldTag tag = nu.tag();
  if (nu.is_zero()) throw DomainError("zero has no totally positive associate");
  if (tag == FieldTag::Rational) return canonical_associate(nu).value;
  const RingElem c = canonical_associate(nu).value;
  const RingElem d = c * totally_positive_fundamental_unit(tag).conj();
  return d.trace() < c.trace() ? d : c;
}

std::vector<Quat> elements_of_norm(const OrderBasis& o, const RingElem& nu) {
  const FieldTag tag = o.field();
  if (nu.tag() != tag) throw DomainError("field tag mismatch");
  if (!is_totally_positive(FieldElem(nu))) return {};
  const TraceLattice lat = build_trace_lattice(o);
  std::vector<std::int64_t> targets;
  for (std::size_t f = 0; f < lat.forms.size(); ++f) {
    const FieldElem mult = f == 0 ? FieldElem::one(tag) : FieldElem::omega(tag);
    const mpq_class v = (FieldElem(nu) * mult).trace() * lat.scale[f];
    if (v.get_den() != 1) return {};
    targets.push_back(to_i64(v.get_num()));
  }
  const double tr = FieldElem(nu).trace().get_d();
  const double bound = tr * (1.0 + 1e-9) + 1e-9;
  std::vector<Quat> out;
  PointSearch search(lat, targets, bound);
  search.run([&](const std::vector<std::int64_t>& c) {
    Quat q(tag);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0) q += lat.zbasis[k] * FieldElem(tag, mpq_class(static_cast<long>(c[k])));
    }
    if (q.nr() == FieldElem(nu)) out.push_back(std::move(q));
  });
  return out;
}

std::vector<Quat> enumerate_by_index(const OrderBasis& o, std::uint64_t m, const EnumerateOptions& options) {
  if (m == 0) throw DomainError("index must be positive");
  if (m > options.cap) {
    throw ResourceError("index " + std::to_string(m) + " exceeds the enumeration cap " + std::to_string(options.cap));
  }
  if (options.reduced_only && !o.is_maximal()) throw DomainError("reducedness is defined for the maximal orders only");
  std::map<std::string, Quat> ideals;
  for (const RingElem& nu : ideals_of_norm(m, o.field())) {
    for (const Quat& q : elements_of_norm(o, balanced_associate(nu))) {
      if (options.reduced_only && !o.is_reduced(q)) continue;
      ideals.try_emplace(right_ideal(o, q).key(), q);
    }
  }
  std::vector<Quat> out;
  out.reserve(ideals.size());
  for (auto& [key, q] : ideals) out.push_back(std::move(q));
  return out;
}

Quat random_element(const OrderBasis& o, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  const FieldTag tag = o.field();
  Quat q(tag);
  for (const auto& b : o.basis()) {
    const long a = dist(rng);
    const long w = degree(tag) == 2 ? dist(rng) : 0;
    q += b * FieldElem(tag, a, w);
  }
  return q;
}

std::size_t unit_group_order(const OrderBasis& o) {
  return elements_of_norm(o, RingElem::one(o.field())).size();
}

}  // namespace csl
