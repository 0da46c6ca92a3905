#include "csl/module.hpp"

#include <numeric>

#include "csl/error.hpp"

namespace csl {

namespace {

using RVec = std::vector<RingElem>;

void check_compatible(const OModule& a, const OModule& b) {
  if (a.tag() != b.tag()) throw DomainError("field tag mismatch");
  if (a.ambient() != b.ambient() || a.dim() != b.dim()) throw DomainError("ambient mismatch");
}

void axpy(RVec& y, const RingElem& t, const RVec& x) {
  for (std::size_t c = 0; c < y.size(); ++c) {
    if (!x[c].is_zero()) y[c] -= t * x[c];
  }
}

std::vector<RVec> echelon(std::vector<RVec> rows, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    bool found = false;
    for (;;) {
      std::size_t p = rows.size();
      mpz_class best;
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c].is_zero()) continue;
        mpz_class n = norm_abs(rows[i][c]);
        if (p == rows.size() || n < best) {
          p = i;
          best = std::move(n);
        }
      }
      if (p == rows.size()) break;
      bool others = false;
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (i == p || rows[i][c].is_zero()) continue;
        const RingElem q = euclid_divmod(rows[i][c], rows[p][c]).quotient;
        axpy(rows[i], q, rows[p]);
        if (!rows[i][c].is_zero()) others = true;
      }
      if (!others) {
        std::swap(rows[p], rows[r]);
        found = true;
        break;
      }
    }
    if (!found) continue;
    const RingElem unit = canonical_associate(rows[r][c]).unit;
    if (unit != RingElem::one(unit.tag())) {
      for (auto& x : rows[r]) x *= unit;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i][c].is_zero()) continue;
      const RingElem t = reduction_multiplier(rows[i][c], rows[r][c]);
      if (!t.is_zero()) axpy(rows[i], t, rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

mpz_class common_denominator(const std::vector<KVector>& gens) {
  mpz_class d = 1;
  for (const auto& g : gens) {
    for (const auto& x : g) {
      const mpz_class dx = x.denominator();
      if (dx != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), dx.get_mpz_t());
    }
  }
  return d;
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

}  // namespace

std::string_view to_string(Ambient a) {
  switch (a) {
    case Ambient::Quat: return "quat";
    case Ambient::Im: return "im";
    case Ambient::Plain: return "plain";
  }
  return "?";
}

KVector to_vector(const Quat& q) { return {q[0], q[1], q[2], q[3]}; }
KVector to_vector(const Vec3K& v) { return {v[0], v[1], v[2]}; }

Quat quat_from_vector(const KVector& v) {
  if (v.size() != 4) throw DomainError("expected a 4-vector");
  return Quat(v[0].tag(), {v[0], v[1], v[2], v[3]});
}

Vec3K vec3_from_vector(const KVector& v) {
  if (v.size() != 3) throw DomainError("expected a 3-vector");
  return {v[0], v[1], v[2]};
}

std::vector<KVector> hnf_rows(FieldTag tag, const std::vector<KVector>& gens, std::size_t ncols,
                              const std::vector<std::size_t>& col_order) {
  const mpz_class d = common_denominator(gens);
  const mpq_class dq(d);
  std::vector<RVec> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.size() != ncols) throw DomainError("generator has wrong length");
    RVec row;
    row.reserve(ncols);
    for (std::size_t t = 0; t < ncols; ++t) {
      const FieldElem& x = g[col_order[t]];
      if (x.tag() != tag) throw DomainError("field tag mismatch");
      row.push_back((x * dq).to_ring());
    }
    rows.push_back(std::move(row));
  }
  rows = echelon(std::move(rows), ncols);
  const mpq_class inv = 1 / dq;
  std::vector<KVector> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    KVector v;
    v.reserve(ncols);
    for (const auto& x : row) v.push_back(FieldElem(x) * inv);
    out.push_back(std::move(v));
  }
  return out;
}

OModule hnf_canonical(FieldTag tag, Ambient ambient, std::size_t dim, const std::vector<KVector>& gens) {
  return OModule::from_generators(tag, ambient, dim, gens);
}

OModule OModule::from_generators(FieldTag tag, Ambient ambient, std::size_t dim,
                                 const std::vector<KVector>& gens) {
  if (ambient == Ambient::Quat && dim != 4) throw DomainError("quaternion modules have dimension 4");
  if (ambient == Ambient::Im && dim != 3) throw DomainError("pure-quaternion modules have dimension 3");
  OModule m;
  m.tag_ = tag;
  m.ambient_ = ambient;
  m.rows_ = hnf_rows(tag, gens, dim, identity_order(dim));
  if (m.rows_.size() != dim) {
    throw DomainError("generators span a module of rank " + std::to_string(m.rows_.size()) +
                      " < " + std::to_string(dim));
  }
  return m;
}

OModule OModule::from_quats(FieldTag tag, const std::vector<Quat>& gens) {
  std::vector<KVector> v;
  v.reserve(gens.size());
  for (const auto& q : gens) v.push_back(to_vector(q));
  return from_generators(tag, Ambient::Quat, 4, v);
}

OModule OModule::from_vec3(FieldTag tag, const std::vector<Vec3K>& gens) {
  std::vector<KVector> v;
  v.reserve(gens.size());
  for (const auto& g : gens) v.push_back(to_vector(g));
  return from_generators(tag, Ambient::Im, 3, v);
}

KVector OModule::coords(const KVector& v) const {
  if (v.size() != dim()) throw DomainError("vector has wrong length");
  const std::size_t n = dim();
  KVector x(n, FieldElem::zero(tag_));
  for (std::size_t c = 0; c < n; ++c) {
    FieldElem s = v[c];
    for (std::size_t i = 0; i < c; ++i) {
      if (!rows_[i][c].is_zero()) s -= x[i] * rows_[i][c];
    }
    x[c] = s / rows_[c][c];
  }
  return x;
}

bool OModule::contains(const KVector& v) const {
  for (const auto& x : coords(v)) {
    if (!x.is_integral()) return false;
  }
  return true;
}

bool OModule::contains(const OModule& sub) const {
  check_compatible(*this, sub);
  for (const auto& row : sub.rows_) {
    if (!contains(row)) return false;
  }
  return true;
}

FieldElem OModule::det() const {
  FieldElem d = FieldElem::one(tag_);
  for (std::size_t i = 0; i < rows_.size(); ++i) d *= rows_[i][i];
  return d;
}

OModule OModule::scaled(const FieldElem& s) const {
  if (s.is_zero()) throw DomainError("scaling by zero");
  std::vector<KVector> gens = rows_;
  for (auto& g : gens) {
    for (auto& x : g) x *= s;
  }
  return from_generators(tag_, ambient_, dim(), gens);
}

OModule OModule::rotated(const Mat3K& r) const {
  if (ambient_ != Ambient::Im) throw DomainError("rotation needs a pure-quaternion module");
  std::vector<KVector> gens;
  gens.reserve(3);
  for (const auto& row : rows_) gens.push_back(to_vector(r.apply(vec3_from_vector(row))));
  return from_generators(tag_, ambient_, 3, gens);
}

std::string OModule::key() const {
  std::string out(to_string(ambient_));
  for (const auto& row : rows_) {
    out += '|';
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += row[c].a().get_str();
      out += ':';
      out += row[c].b().get_str();
    }
  }
  return out;
}

OModule intersect(const OModule& m1, const OModule& m2) {
  check_compatible(m1, m2);
  const std::size_t n = m1.dim();
  const FieldElem zero = FieldElem::zero(m1.tag());
  std::vector<KVector> gens;
  gens.reserve(2 * n);
  for (const auto& row : m1.basis()) {
    KVector g = row;
    g.insert(g.end(), row.begin(), row.end());
    gens.push_back(std::move(g));
  }
  for (const auto& row : m2.basis()) {
    KVector g = row;
    g.insert(g.end(), n, zero);
    gens.push_back(std::move(g));
  }
  const auto rows = hnf_rows(m1.tag(), gens, 2 * n, identity_order(2 * n));
  if (rows.size() != 2 * n) throw Error("intersection stack lost rank");
  std::vector<KVector> lower;
  for (std::size_t i = n; i < 2 * n; ++i) {
    lower.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(n), rows[i].end());
  }
  return OModule::from_generators(m1.tag(), m1.ambient(), n, lower);
}

OModule module_sum(const OModule& m1, const OModule& m2) {
  check_compatible(m1, m2);
  std::vector<KVector> gens = m1.basis();
  gens.insert(gens.end(), m2.basis().begin(), m2.basis().end());
  return OModule::from_generators(m1.tag(), m1.ambient(), m1.dim(), gens);
}

KIndex index_K(const OModule& sup, const OModule& sub) {
  check_compatible(sup, sub);
  if (!sup.contains(sub)) throw DomainError("not a submodule");
  const FieldElem ratio = sub.det() / sup.det();
  return {canonical_associate(ratio.to_ring()).value};
}

OModule im_project(const OModule& m) {
  if (m.ambient() != Ambient::Quat) throw DomainError("im_project needs a quaternion module");
  const auto rows = hnf_rows(m.tag(), m.basis(), 4, {1, 2, 3, 0});
  std::vector<KVector> gens;
  for (std::size_t i = 0; i < 3; ++i) gens.push_back({rows[i][0], rows[i][1], rows[i][2]});
  return OModule::from_generators(m.tag(), Ambient::Im, 3, gens);
}

RingElem scalar_intersect(const OModule& m) {
  if (m.ambient() != Ambient::Quat) throw DomainError("scalar_intersect needs a quaternion module");
  const auto rows = hnf_rows(m.tag(), m.basis(), 4, {1, 2, 3, 0});
  const FieldElem g = rows[3][3];
  if (!g.is_integral()) throw DomainError("M ∩ K is not an integral ideal");
  return canonical_associate(g.to_ring()).value;
}

OModule pure_intersect(const OModule& m) {
  if (m.ambient() != Ambient::Quat) throw DomainError("pure_intersect needs a quaternion module");
  std::vector<KVector> gens;
  for (std::size_t i = 1; i < 4; ++i) {
    gens.push_back({m.basis()[i][1], m.basis()[i][2], m.basis()[i][3]});
  }
  return OModule::from_generators(m.tag(), Ambient::Im, 3, gens);
}

FieldElem real_part(const OModule& m) {
  if (m.ambient() != Ambient::Quat) throw DomainError("real_part needs a quaternion module");
  return m.basis()[0][0];
}

FieldElem canonical_fractional(const FieldElem& x) {
  if (x.is_zero()) return x;
  const mpq_class d(x.denominator());
  return FieldElem(canonical_associate((x * d).to_ring()).value) * (1 / d);
}

OModule flatten_to_z(const OModule& m) {
  const FieldTag tag = m.tag();
  const std::size_t n = m.dim();
  if (degree(tag) == 1) return OModule::from_generators(tag, Ambient::Plain, n, m.basis());
  const FieldElem w = FieldElem::omega(tag);
  std::vector<KVector> gens;
  for (const auto& row : m.basis()) {
    for (int s = 0; s < 2; ++s) {
      KVector g;
      g.reserve(2 * n);
      for (const auto& x : row) {
        const FieldElem y = s == 0 ? x : x * w;
        g.emplace_back(FieldTag::Rational, y.a());
        g.emplace_back(FieldTag::Rational, y.b());
      }
      gens.push_back(std::move(g));
    }
  }
  return OModule::from_generators(FieldTag::Rational, Ambient::Plain, 2 * n, gens);
}

nlohmann::json to_json(const OModule& m) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& row : m.basis()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    basis.push_back(std::move(r));
  }
  return {{"field", std::string(to_string(m.tag()))},
          {"ambient", std::string(to_string(m.ambient()))},
          {"basis", std::move(basis)}};
}

OModule module_from_json(const nlohmann::json& j) {
  try {
    const FieldTag tag = parse_field_tag(j.at("field").get<std::string>());
    const std::string amb = j.at("ambient").get<std::string>();
    Ambient ambient = Ambient::Plain;
    if (amb == "quat") {
      ambient = Ambient::Quat;
    } else if (amb == "im") {
      ambient = Ambient::Im;
    } else if (amb != "plain") {
      throw ParseError("unknown ambient '" + amb + "'");
    }
    std::vector<KVector> gens;
    for (const auto& r : j.at("basis")) {
      KVector v;
      for (const auto& x : r) v.push_back(parse_field_elem(x.get<std::string>(), tag));
      gens.push_back(std::move(v));
    }
    const std::size_t dim = gens.empty() ? 0 : gens.front().size();
    return OModule::from_generators(tag, ambient, dim, gens);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed module JSON: ") + e.what());
  }
}

}  // namespace csl
