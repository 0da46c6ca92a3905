#pragma once

// The Hurwitz ring J (over Z), the icosian ring I and its conjugate I'
// (over Z[tau]), the octahedral ring K (over Z[sqrt2]) and the Lipschitz
// order L = O + iO + jO + kO over any of the three base rings.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "csl/module.hpp"
#include "csl/quaternion.hpp"

namespace csl {

enum class OrderTag { Hurwitz, Icosian, IcosianConj, Octahedral, Lipschitz };

/// Default bound on N(nr q) accepted by the enumerators.
inline constexpr std::uint64_t kDefaultCap = 10000;

class OrderBasis {
 public:
  static OrderBasis hurwitz();
  static OrderBasis icosian();
  static OrderBasis icosian_conj();
  static OrderBasis octahedral();
  static OrderBasis lipschitz(FieldTag tag);
  /// hurwitz, icosian, icosian-conj, octahedral, lipschitz-q, lipschitz-r5, lipschitz-r2
  static OrderBasis from_name(std::string_view name);

  OrderTag order_tag() const { return order_tag_; }
  FieldTag field() const { return field_; }
  std::string name() const;
  bool is_maximal() const { return order_tag_ != OrderTag::Lipschitz; }

  const std::vector<Quat>& basis() const { return basis_; }
  const OModule& module() const { return module_; }

  bool contains(const Quat& q) const;
  /// Canonical generator of the largest scalar a with q/a in the order.
  RingElem content(const Quat& q) const;
  bool is_unit(const Quat& q) const;
  bool is_reduced(const Quat& q) const;
  /// Divides out the content and, for J, right factors (1+i) of even norm.
  Quat reduce_generator(const Quat& q) const;

 private:
  OrderBasis(OrderTag ot, FieldTag ft, std::vector<Quat> basis);
  void require_member(const Quat& q) const;

  OrderTag order_tag_ = OrderTag::Lipschitz;
  FieldTag field_ = FieldTag::Rational;
  std::vector<Quat> basis_;
  OModule module_;
};

/// q*O, O*q and q*O*q^-1 as modules over the ring of integers.
OModule right_ideal(const OrderBasis& o, const Quat& q);
OModule left_ideal(const OrderBasis& o, const Quat& q);
OModule conjugated_order(const OrderBasis& o, const Quat& q);

/// Multiplies q by the least positive integer that puts it into L (hence into O).
Quat integral_multiple(const Quat& q);

/// The totally positive associate of nu with the smallest trace.
RingElem balanced_associate(const RingElem& nu);

/// All q in O with nr(q) = nu (nu totally positive).
std::vector<Quat> elements_of_norm(const OrderBasis& o, const RingElem& nu);

struct EnumerateOptions {
  std::uint64_t cap = kDefaultCap;
  bool reduced_only = true;
};

/// One generator per right ideal qO with N(nr q) = m, reduced generators only
/// unless options.reduced_only is false.  Sorted by the canonical key of qO.
std::vector<Quat> enumerate_by_index(const OrderBasis& o, std::uint64_t m,
                                     const EnumerateOptions& options = {});

/// Random element with basis coordinates a + b*w, |a|, |b| <= range.
Quat random_element(const OrderBasis& o, std::mt19937_64& rng, long range);

/// Number of q in O with nr(q) = 1.
std::size_t unit_group_order(const OrderBasis& o);

}  // namespace csl
