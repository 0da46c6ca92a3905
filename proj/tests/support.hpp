#pragma once

// Generators and independent oracles shared by the test programs.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "csl/csm.hpp"
#include "csl/module.hpp"
#include "csl/orders.hpp"
#include "csl/quaternion.hpp"
#include "csl/rings.hpp"

namespace csl::testing {

inline constexpr FieldTag kTags[] = {FieldTag::Rational, FieldTag::RootFive, FieldTag::RootTwo};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  RingElem ring(FieldTag t, long range = 20) {
    return RingElem(t, integer(-range, range), t == FieldTag::Rational ? 0 : integer(-range, range));
  }

  RingElem nonzero_ring(FieldTag t, long range = 20) {
    for (;;) {
      RingElem x = ring(t, range);
      if (!x.is_zero()) return x;
    }
  }

  FieldElem field(FieldTag t, long range = 9, long den = 6) {
    const long b = t == FieldTag::Rational ? 0 : integer(-range, range);
    return FieldElem(t, mpq_class(integer(-range, range), integer(1, den)), mpq_class(b, integer(1, den)));
  }

  FieldElem nonzero_field(FieldTag t, long range = 9, long den = 6) {
    for (;;) {
      FieldElem x = field(t, range, den);
      if (!x.is_zero()) return x;
    }
  }

  Quat quat(FieldTag t, long range = 5, long den = 3) {
    return Quat(t, {field(t, range, den), field(t, range, den), field(t, range, den), field(t, range, den)});
  }

  Quat nonzero_quat(FieldTag t, long range = 5, long den = 3) {
    for (;;) {
      Quat q = quat(t, range, den);
      if (!q.is_zero()) return q;
    }
  }

  Quat integral_quat(FieldTag t, long range = 4) {
    return Quat(t, {FieldElem(ring(t, range)), FieldElem(ring(t, range)), FieldElem(ring(t, range)),
                    FieldElem(ring(t, range))});
  }

  /// Nonzero element of o with small coordinates.
  Quat order_element(const OrderBasis& o, long range = 2) {
    for (;;) {
      Quat q = random_element(o, rng_, range);
      if (!q.is_zero()) return q;
    }
  }

  /// Vectors of length n with small integral coordinates.
  std::vector<KVector> integral_rows(FieldTag t, std::size_t rows, std::size_t n, long range = 3) {
    std::vector<KVector> out(rows, KVector(n, FieldElem::zero(t)));
    for (auto& r : out) {
      for (auto& x : r) x = FieldElem(ring(t, range));
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Solves x = y*A for y over Q by Gauss-Jordan elimination (A square, invertible).
inline std::vector<std::vector<mpq_class>> rational_inverse(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::runtime_error("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const mpq_class d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

/// Rational coordinates of the Z-module rows (flattened a + b*w -> a, b).
inline std::vector<std::vector<mpq_class>> flat_rows(const OModule& m) {
  std::vector<std::vector<mpq_class>> out;
  const OModule z = flatten_to_z(m);
  for (const auto& row : z.basis()) {
    std::vector<mpq_class> r;
    for (const auto& x : row) r.push_back(x.a());
    out.push_back(r);
  }
  return out;
}

/// [sup : sub] by listing the classes of a box of sup-points modulo sub.
/// Each sup basis vector b_i is stepped 0..n_i-1 with n_i the order of b_i
/// modulo sub; classes are told apart by the fractional parts of the
/// coordinates with respect to sub.  Throws if the box exceeds `limit`.
inline std::size_t coset_count(const OModule& sup, const OModule& sub, std::size_t limit = 200000) {
  const auto s = flat_rows(sup);
  const auto inv = rational_inverse(flat_rows(sub));
  const std::size_t n = s.size();
  auto sub_coords = [&](const std::vector<mpq_class>& v) {
    std::vector<mpq_class> y(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) y[j] += v[k] * inv[k][j];
    }
    return y;
  };
  std::vector<std::size_t> order(n, 1);
  std::size_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto y = sub_coords(s[i]);
    mpz_class l = 1;
    for (const auto& c : y) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    order[i] = l.get_ui();
    box *= order[i];
    if (box > limit) throw std::runtime_error("coset box too large");
  }
  std::set<std::vector<mpq_class>> classes;
  std::vector<std::size_t> c(n, 0);
  for (std::size_t t = 0; t < box; ++t) {
    std::vector<mpq_class> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) v[k] += mpq_class(static_cast<unsigned long>(c[i])) * s[i][k];
    }
    auto y = sub_coords(v);
    for (auto& x : y) {
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      x -= fl;
    }
    classes.insert(std::move(y));
    for (std::size_t i = 0; i < n; ++i) {
      if (++c[i] < order[i]) break;
      c[i] = 0;
    }
  }
  return classes.size();
}

/// Membership in M_B by its congruence description.
inline bool in_mb_by_congruence(const Vec3K& v) {
  const FieldTag t = FieldTag::RootFive;
  for (const auto& x : v) {
    if (!x.is_integral()) return false;
  }
  const RingElem tau = RingElem::omega(t);
  const RingElem s = tau * tau * v[0].to_ring() + tau * v[1].to_ring() + v[2].to_ring();
  return divides(RingElem(t, 2L), s);
}

/// Membership in M_F by its congruence description.
inline bool in_mf_by_congruence(const Vec3K& v) {
  const FieldTag t = FieldTag::RootFive;
  for (const auto& x : v) {
    if (!x.is_integral()) return false;
  }
  const RingElem tau = RingElem::omega(t);
  const RingElem a1 = v[0].to_ring(), a2 = tau * v[1].to_ring(), a3 = tau * tau * v[2].to_ring();
  const RingElem two(t, 2L);
  return divides(two, a1 - a2) && divides(two, a2 - a3);
}

}  // namespace csl::testing
