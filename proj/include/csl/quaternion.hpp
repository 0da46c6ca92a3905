#pragma once

// Quaternions over K = Q, Q(sqrt5) or Q(sqrt2) in the basis {1, i, j, k},
// and the Cayley parametrisation of SO(3, K).

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "csl/rings.hpp"

namespace csl {

using Vec3K = std::array<FieldElem, 3>;

class Quat {
 public:
  Quat() = default;
  explicit Quat(FieldTag tag);
  Quat(FieldTag tag, std::array<FieldElem, 4> x);
  Quat(FieldTag tag, long x0, long x1, long x2, long x3);

  static Quat scalar(const FieldElem& s);
  static Quat unit_i(FieldTag tag) { return Quat(tag, 0, 1, 0, 0); }
  static Quat unit_j(FieldTag tag) { return Quat(tag, 0, 0, 1, 0); }
  static Quat unit_k(FieldTag tag) { return Quat(tag, 0, 0, 0, 1); }

  FieldTag tag() const { return tag_; }
  const FieldElem& operator[](int idx) const { return x_[static_cast<std::size_t>(idx)]; }
  const std::array<FieldElem, 4>& coords() const { return x_; }

  bool is_zero() const;
  bool is_scalar() const;

  Quat conj() const;
  /// nr(q) = q * conj(q) = x0^2 + x1^2 + x2^2 + x3^2.
  FieldElem nr() const;
  /// tr(q) = q + conj(q) = 2*x0.
  FieldElem tr() const;
  Quat inverse() const;

  Quat operator-() const;
  Quat& operator+=(const Quat& o);
  Quat& operator-=(const Quat& o);
  Quat& operator*=(const FieldElem& s);

  friend Quat operator+(Quat x, const Quat& y) { return x += y; }
  friend Quat operator-(Quat x, const Quat& y) { return x -= y; }
  friend Quat operator*(const Quat& x, const Quat& y);
  friend Quat operator*(Quat x, const FieldElem& s) { return x *= s; }
  friend Quat operator*(const FieldElem& s, Quat x) { return x *= s; }
  friend bool operator==(const Quat& x, const Quat& y) { return x.tag_ == y.tag_ && x.x_ == y.x_; }
  friend bool operator!=(const Quat& x, const Quat& y) { return !(x == y); }

 private:
  FieldTag tag_ = FieldTag::Rational;
  std::array<FieldElem, 4> x_{};
};

struct ReIm {
  FieldElem re;
  Vec3K im;
};

ReIm im_re(const Quat& q);
Quat from_re_im(const FieldElem& re, const Vec3K& im);
Quat pure(const Vec3K& v);

/// Row-major 3x3 matrix over K.
class Mat3K {
 public:
  Mat3K() = default;
  explicit Mat3K(FieldTag tag);
  static Mat3K identity(FieldTag tag);

  FieldTag tag() const { return tag_; }
  const FieldElem& operator()(int r, int c) const { return m_[idx(r, c)]; }
  FieldElem& operator()(int r, int c) { return m_[idx(r, c)]; }

  Mat3K transpose() const;
  FieldElem det() const;
  FieldElem trace() const;
  Vec3K apply(const Vec3K& v) const;

  friend Mat3K operator*(const Mat3K& x, const Mat3K& y);
  friend bool operator==(const Mat3K& x, const Mat3K& y) { return x.tag_ == y.tag_ && x.m_ == y.m_; }
  friend bool operator!=(const Mat3K& x, const Mat3K& y) { return !(x == y); }

 private:
  static std::size_t idx(int r, int c) { return static_cast<std::size_t>(3 * r + c); }
  FieldTag tag_ = FieldTag::Rational;
  std::array<FieldElem, 9> m_{};
};

bool is_special_orthogonal(const Mat3K& m);

/// The rotation R_q with Im(q a q^-1) = R_q Im(a).  Throws DomainError for q = 0.
Mat3K cayley_matrix(const Quat& q);

struct AxisAngle {
  Vec3K axis;
  FieldElem cos_angle;
};

/// Axis Im(q) and cos(phi) = (x0^2 - |Im q|^2) / nr(q).  Throws for scalar q.
AxisAngle axis_angle(const Quat& q);

/// A quaternion q with integral coordinates and R_q = m.  Throws DomainError
/// if m is not in SO(3, K).
Quat rotation_to_quat(const Mat3K& m);

/// Text: "x0 + x1*i + x2*j + x3*k"; irrational coefficients are parenthesised.
std::string to_string(const Quat& q);
std::string to_string(const Vec3K& v);
std::string to_string(const Mat3K& m);
std::ostream& operator<<(std::ostream& os, const Quat& q);

/// Accepts expressions such as "2 + i", "(1+i+j+k)/2", "(1 + w)*i - k" and
/// the tuple form "(x0, x1, x2, x3)".
Quat parse_quat(std::string_view text, FieldTag tag);

/// Accepts "a, b, c; d, e, f; g, h, i" or "[[a,b,c],[d,e,f],[g,h,i]]".
Mat3K parse_matrix(std::string_view text, FieldTag tag);

}  // namespace csl
