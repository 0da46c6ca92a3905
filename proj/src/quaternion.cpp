#include "csl/quaternion.hpp"

#include <ostream>
#include <sstream>
#include <vector>

#include "csl/detail/expr.hpp"
#include "csl/error.hpp"

namespace csl {

namespace {

void check_same(FieldTag x, FieldTag y) {
  if (x != y) throw DomainError("field tag mismatch");
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<FieldElem> scalar_symbol(std::string_view name, FieldTag tag) {
  if (tag == FieldTag::RootFive) {
    if (name == "w" || name == "tau") return FieldElem::omega(tag);
    if (name == "sqrt5") return FieldElem(tag, -1L, 2L);
  }
  if (tag == FieldTag::RootTwo && (name == "w" || name == "sqrt2")) return FieldElem::omega(tag);
  return std::nullopt;
}

}  // namespace

// -------------------------------------------------------------------- Quat

Quat::Quat(FieldTag tag) : tag_(tag) { x_.fill(FieldElem::zero(tag)); }

Quat::Quat(FieldTag tag, std::array<FieldElem, 4> x) : tag_(tag), x_(std::move(x)) {
  for (const auto& c : x_) check_same(tag_, c.tag());
}

Quat::Quat(FieldTag tag, long x0, long x1, long x2, long x3)
    : tag_(tag),
      x_{FieldElem(tag, x0), FieldElem(tag, x1), FieldElem(tag, x2), FieldElem(tag, x3)} {}

Quat Quat::scalar(const FieldElem& s) {
  Quat q(s.tag());
  q.x_[0] = s;
  return q;
}

bool Quat::is_zero() const {
  for (const auto& c : x_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Quat::is_scalar() const { return x_[1].is_zero() && x_[2].is_zero() && x_[3].is_zero(); }

Quat Quat::conj() const { return Quat(tag_, {x_[0], -x_[1], -x_[2], -x_[3]}); }

FieldElem Quat::nr() const {
  return x_[0] * x_[0] + x_[1] * x_[1] + x_[2] * x_[2] + x_[3] * x_[3];
}

FieldElem Quat::tr() const { return x_[0] * mpq_class(2); }

Quat Quat::inverse() const {
  if (is_zero()) throw DomainError("zero quaternion is not invertible");
  return conj() * nr().inverse();
}

Quat Quat::operator-() const { return Quat(tag_, {-x_[0], -x_[1], -x_[2], -x_[3]}); }

Quat& Quat::operator+=(const Quat& o) {
  check_same(tag_, o.tag_);
  for (std::size_t t = 0; t < 4; ++t) x_[t] += o.x_[t];
  return *this;
}

Quat& Quat::operator-=(const Quat& o) {
  check_same(tag_, o.tag_);
  for (std::size_t t = 0; t < 4; ++t) x_[t] -= o.x_[t];
  return *this;
}

Quat& Quat::operator*=(const FieldElem& s) {
  check_same(tag_, s.tag());
  for (auto& c : x_) c *= s;
  return *this;
}

Quat operator*(const Quat& x, const Quat& y) {
  check_same(x.tag_, y.tag_);
  const auto& a = x.x_;
  const auto& b = y.x_;
  return Quat(x.tag_, {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                       a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                       a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                       a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]});
}

ReIm im_re(const Quat& q) { return {q[0], {q[1], q[2], q[3]}}; }

Quat from_re_im(const FieldElem& re, const Vec3K& im) {
  return Quat(re.tag(), {re, im[0], im[1], im[2]});
}

Quat pure(const Vec3K& v) { return from_re_im(FieldElem::zero(v[0].tag()), v); }

// ------------------------------------------------------------------- Mat3K

Mat3K::Mat3K(FieldTag tag) : tag_(tag) { m_.fill(FieldElem::zero(tag)); }

Mat3K Mat3K::identity(FieldTag tag) {
  Mat3K m(tag);
  for (int d = 0; d < 3; ++d) m(d, d) = FieldElem::one(tag);
  return m;
}

Mat3K Mat3K::transpose() const {
  Mat3K t(tag_);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

FieldElem Mat3K::det() const {
  const Mat3K& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

FieldElem Mat3K::trace() const { return m_[0] + m_[4] + m_[8]; }

Vec3K Mat3K::apply(const Vec3K& v) const {
  Vec3K out{FieldElem::zero(tag_), FieldElem::zero(tag_), FieldElem::zero(tag_)};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
  }
  return out;
}

Mat3K operator*(const Mat3K& x, const Mat3K& y) {
  check_same(x.tag_, y.tag_);
  Mat3K out(x.tag_);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      FieldElem s = FieldElem::zero(x.tag_);
      for (int t = 0; t < 3; ++t) s += x(r, t) * y(t, c);
      out(r, c) = s;
    }
  }
  return out;
}

bool is_special_orthogonal(const Mat3K& m) {
  return m.transpose() * m == Mat3K::identity(m.tag()) && m.det() == FieldElem::one(m.tag());
}

// ------------------------------------------------------------------ Cayley

Mat3K cayley_matrix(const Quat& q) {
  if (q.is_zero()) throw DomainError("Cayley matrix of the zero quaternion");
  const FieldTag tag = q.tag();
  const FieldElem& k = q[0];
  const FieldElem& l = q[1];
  const FieldElem& m = q[2];
  const FieldElem& n = q[3];
  const FieldElem kk = k * k, ll = l * l, mm = m * m, nn = n * n;
  const mpq_class two(2);
  Mat3K r(tag);
  r(0, 0) = kk + ll - mm - nn;
  r(0, 1) = (l * m - k * n) * two;
  r(0, 2) = (k * m + l * n) * two;
  r(1, 0) = (k * n + l * m) * two;
  r(1, 1) = kk - ll + mm - nn;
  r(1, 2) = (m * n - k * l) * two;
  r(2, 0) = (l * n - k * m) * two;
  r(2, 1) = (k * l + m * n) * two;
  r(2, 2) = kk - ll - mm + nn;
  const FieldElem inv = q.nr().inverse();
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) r(a, b) *= inv;
  }
  return r;
}

AxisAngle axis_angle(const Quat& q) {
  if (q.is_scalar()) throw DomainError("scalar quaternion has no rotation axis");
  const FieldElem im2 = q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
  return {{q[1], q[2], q[3]}, (q[0] * q[0] - im2) / q.nr()};
}

Quat rotation_to_quat(const Mat3K& m) {
  const FieldTag tag = m.tag();
  const FieldElem one = FieldElem::one(tag);
  const std::array<std::array<FieldElem, 4>, 4> candidates{{
      {one + m.trace(), m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1)},
      {m(2, 1) - m(1, 2), one + m(0, 0) - m(1, 1) - m(2, 2), m(0, 1) + m(1, 0), m(0, 2) + m(2, 0)},
      {m(0, 2) - m(2, 0), m(0, 1) + m(1, 0), one - m(0, 0) + m(1, 1) - m(2, 2), m(1, 2) + m(2, 1)},
      {m(1, 0) - m(0, 1), m(0, 2) + m(2, 0), m(1, 2) + m(2, 1), one - m(0, 0) - m(1, 1) + m(2, 2)},
  }};
  for (const auto& c : candidates) {
    Quat q(tag, c);
    if (q.is_zero()) continue;
    mpz_class d = 1;
    for (const auto& x : c) {
      const mpz_class dx = x.denominator();
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), dx.get_mpz_t());
    }
    q *= FieldElem(tag, mpq_class(d));
    if (cayley_matrix(q) == m) return q;
  }
  throw DomainError("matrix is not a rotation in SO(3, K)");
}

// -------------------------------------------------------------------- text

std::string to_string(const Quat& q) {
  static constexpr std::array<const char*, 4> kUnit{"", "i", "j", "k"};
  std::string out;
  for (int t = 0; t < 4; ++t) {
    const FieldElem& c = q[t];
    if (c.is_zero()) continue;
    const bool neg = c.is_rational() && sgn(c.a()) < 0;
    const FieldElem mag = neg ? -c : c;
    std::string body;
    if (t == 0) {
      body = c.is_rational() ? to_string(mag) : "(" + to_string(mag) + ")";
    } else if (mag == FieldElem::one(q.tag())) {
      body = kUnit[static_cast<std::size_t>(t)];
    } else {
      body = (c.is_rational() ? to_string(mag) : "(" + to_string(mag) + ")") + "*" +
             kUnit[static_cast<std::size_t>(t)];
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const Vec3K& v) {
  return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ", " + to_string(v[2]) + ")";
}

std::string to_string(const Mat3K& m) {
  std::string out = "[";
  for (int r = 0; r < 3; ++r) {
    out += r ? ", [" : "[";
    for (int c = 0; c < 3; ++c) out += (c ? ", " : "") + to_string(m(r, c));
    out += "]";
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << to_string(q); }

Quat parse_quat(std::string_view text, FieldTag tag) {
  const std::string_view body = trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    const auto parts = split_top_level(body.substr(1, body.size() - 2), ',');
    if (parts.size() == 4) {
      std::array<FieldElem, 4> x;
      for (std::size_t t = 0; t < 4; ++t) x[t] = parse_field_elem(parts[t], tag);
      return Quat(tag, x);
    }
    if (parts.size() != 1) throw ParseError("quaternion tuple needs four entries: \"" + std::string(text) + "\"");
  }
  detail::ExprParser<Quat> parser(
      body, [tag](const mpz_class& n) { return Quat::scalar(FieldElem(tag, mpq_class(n))); },
      [tag](std::string_view name) -> std::optional<Quat> {
        if (name == "i") return Quat::unit_i(tag);
        if (name == "j") return Quat::unit_j(tag);
        if (name == "k") return Quat::unit_k(tag);
        if (auto s = scalar_symbol(name, tag)) return Quat::scalar(*s);
        return std::nullopt;
      },
      [](const Quat& x, const Quat& y) {
        if (!y.is_scalar() || y.is_zero()) throw ParseError("division only by a nonzero scalar");
        return x * y[0].inverse();
      });
  return parser.parse();
}

Mat3K parse_matrix(std::string_view text, FieldTag tag) {
  std::string flat;
  {
    // "[[a,b],[c,d]]" -> "a,b;c,d"
    std::string s(trim(text));
    std::string rows;
    int depth = 0;
    for (char c : s) {
      if (c == '[') {
        ++depth;
        continue;
      }
      if (c == ']') {
        --depth;
        continue;
      }
      if (c == ',' && depth == 1) {
        rows += ';';
        continue;
      }
      rows += c;
    }
    flat = rows;
  }
  const auto rows = split_top_level(flat, ';');
  if (rows.size() != 3) throw ParseError("matrix needs three rows: \"" + std::string(text) + "\"");
  Mat3K m(tag);
  for (int r = 0; r < 3; ++r) {
    const auto cols = split_top_level(rows[static_cast<std::size_t>(r)], ',');
    if (cols.size() != 3) throw ParseError("matrix row needs three entries: \"" + std::string(text) + "\"");
    for (int c = 0; c < 3; ++c) m(r, c) = parse_field_elem(cols[static_cast<std::size_t>(c)], tag);
  }
  return m;
}

}  // namespace csl
