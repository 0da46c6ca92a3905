#pragma once

// Coincidence site modules Γ ∩ RΓ of the cubic lattices and the icosahedral
// and octahedral modules, their indices, and the correspondence with
// one-sided ideals of the maximal orders.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csl/module.hpp"
#include "csl/orders.hpp"

namespace csl {

enum class LatticeKind { Cubic, Fcc, Bcc, ModuleB, ModuleF };

/// Z^3, the even-sum sublattice Γ_fcc, Γ_bcc = Im(J), and the icosahedral
/// modules M_B, M_F over Z[tau].
OModule lattice(LatticeKind kind);
LatticeKind parse_lattice_kind(std::string_view name);

/// Γ = Im(O), the module whose coincidences are governed by O.
OModule gamma_of(const OrderBasis& o);

/// Σ(R_q) = N(nr q*), q* = reduce_generator of a suitable integral multiple of q.
mpz_class sigma_index(const OrderBasis& o, const Quat& q);

struct CsmResult {
  OModule csm;
  mpz_class sigma;
};

/// Γ ∩ R_q Γ by exact module intersection, with its index in Γ.
CsmResult csm_bruteforce(const OModule& gamma, const Quat& q);
/// The same for a rotation given as a matrix.
CsmResult csm_bruteforce(const OModule& gamma, const Mat3K& rotation);

struct CsmRecord {
  Quat q;  // reduced generator of the right ideal
  OModule csm;
  mpz_class sigma;
};

struct CountOptions {
  std::uint64_t cap = kDefaultCap;
  unsigned workers = 1;
};

struct CountResult {
  std::uint64_t m = 0;
  std::size_t ideals = 0;           // distinct right ideals qO with q reduced
  std::vector<CsmRecord> csms;      // distinct CSMs of index m, sorted by key
  std::size_t count() const { return csms.size(); }
};

/// All CSMs of index m obtained from reduced generators.  The result does not
/// depend on the number of workers.
CountResult count_csms(const OrderBasis& o, std::uint64_t m, const CountOptions& options = {});

enum class SeriesCase { Cub, Ico, Oct };
std::string_view to_string(SeriesCase c);
SeriesCase parse_series_case(std::string_view name);
SeriesCase series_case_of(const OrderBasis& o);

/// Membership in the coincidence spectrum by the prime-power criterion.
bool spectrum_member(SeriesCase c, std::uint64_t m);

/// A representation witnessing membership by direct search: (k, l) with
/// k^2 + k*l - l^2 = m (ico), k^2 - 2*l^2 = m (oct); for cub a primitive
/// (a, b, c, d) with a^2 + b^2 + c^2 + d^2 = m, m odd.
std::optional<std::vector<long>> spectrum_representation(SeriesCase c, std::uint64_t m);

struct CorrespondenceReport {
  bool im_equal = false;        // Im(O ∩ qOq^-1) = Im(qO) = Im(O conj(q))
  bool sum_equal = false;       // O ∩ qOq^-1 = O_K + qO = O_K + O conj(q)
  bool index_order = false;     // [O : O ∩ qOq^-1] = N(nr q)
  bool index_ideal = false;     // [O ∩ qOq^-1 : qO] = N(nr q)
  bool scalar_part = false;     // qO ∩ K = nr(q) O_K
  mpz_class norm;
  bool all() const { return im_equal && sum_equal && index_order && index_ideal && scalar_part; }
};

/// Throws DomainError unless q is reduced in O.
CorrespondenceReport verify_ideal_correspondence(const OrderBasis& o, const Quat& q);

}  // namespace csl
