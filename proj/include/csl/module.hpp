#pragma once

// Full-rank modules over the ring of integers of K, stored by a canonical
// Hermite normal form: the basis rows are upper triangular, every pivot is a
// canonical associate and every entry above a pivot is the canonical
// representative of its class modulo the pivot.

#include <cstddef>
#include <string>
#include <vector>

#include "csl/quaternion.hpp"
#include "csl/rings.hpp"
#include "json.hpp"

namespace csl {

/// Coordinate space: quaternions (1, i, j, k), pure quaternions (i, j, k),
/// or a plain coordinate space of any dimension.
enum class Ambient { Quat, Im, Plain };

std::string_view to_string(Ambient a);

using KVector = std::vector<FieldElem>;

KVector to_vector(const Quat& q);
KVector to_vector(const Vec3K& v);
Quat quat_from_vector(const KVector& v);
Vec3K vec3_from_vector(const KVector& v);

class OModule {
 public:
  OModule() = default;

  /// Canonical HNF of the module generated by gens.  Throws DomainError if the
  /// generators do not span a full-rank module.
  static OModule from_generators(FieldTag tag, Ambient ambient, std::size_t dim,
                                 const std::vector<KVector>& gens);
  static OModule from_quats(FieldTag tag, const std::vector<Quat>& gens);
  static OModule from_vec3(FieldTag tag, const std::vector<Vec3K>& gens);

  FieldTag tag() const { return tag_; }
  Ambient ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<KVector>& basis() const { return rows_; }

  /// Coordinates of v with respect to the basis (over K).
  KVector coords(const KVector& v) const;
  bool contains(const KVector& v) const;
  bool contains(const Quat& q) const { return contains(to_vector(q)); }
  bool contains(const OModule& sub) const;

  /// Product of the pivots: the determinant of the basis up to a unit.
  FieldElem det() const;

  OModule scaled(const FieldElem& s) const;
  /// Image under a linear map acting on column vectors (Im ambient only).
  OModule rotated(const Mat3K& r) const;

  /// Stable text key; equal modules have equal keys.
  std::string key() const;

  friend bool operator==(const OModule& x, const OModule& y) {
    return x.tag_ == y.tag_ && x.ambient_ == y.ambient_ && x.rows_ == y.rows_;
  }
  friend bool operator!=(const OModule& x, const OModule& y) { return !(x == y); }

 private:
  FieldTag tag_ = FieldTag::Rational;
  Ambient ambient_ = Ambient::Plain;
  std::vector<KVector> rows_;
};

/// HNF rows of the module generated by gens, with the columns visited in the
/// given order (col_order[t] is the ambient coordinate placed at position t).
/// The returned rows use the permuted coordinates.  Zero rows are dropped.
std::vector<KVector> hnf_rows(FieldTag tag, const std::vector<KVector>& gens, std::size_t ncols,
                              const std::vector<std::size_t>& col_order);

OModule hnf_canonical(FieldTag tag, Ambient ambient, std::size_t dim, const std::vector<KVector>& gens);

OModule intersect(const OModule& m1, const OModule& m2);
OModule module_sum(const OModule& m1, const OModule& m2);

struct KIndex {
  RingElem generator;
  mpz_class absolute() const { return norm_abs(generator); }
};

/// [sup : sub]_K.  Throws DomainError unless sub is contained in sup.
KIndex index_K(const OModule& sup, const OModule& sub);

/// {Im x : x in M} for a rank-4 quaternion module.
OModule im_project(const OModule& m);
/// Generator of M ∩ K (scalar quaternions), a canonical associate.
RingElem scalar_intersect(const OModule& m);
/// M ∩ Im(H), as a module in the Im ambient.
OModule pure_intersect(const OModule& m);
/// Generator of {Re x : x in M}; may be fractional.
FieldElem real_part(const OModule& m);

/// Canonical generator of the fractional ideal x*O.
FieldElem canonical_fractional(const FieldElem& x);

/// The rank-2n Z-module obtained by writing each coordinate a + b*w as (a, b).
OModule flatten_to_z(const OModule& m);

nlohmann::json to_json(const OModule& m);
OModule module_from_json(const nlohmann::json& j);

}  // namespace csl
