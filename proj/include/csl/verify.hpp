#pragma once

// Self-check suites shared by the command line tool and the test programs.

#include <cstdint>
#include <string>

#include "csl/csm.hpp"
#include "csl/series.hpp"

namespace csl {

struct SuiteOutcome {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, if any
};

/// sigma_index agrees with the brute-force intersection index (and equals m)
/// for every reduced generator of index m <= max_index.
SuiteOutcome suite_formula_oracle(const OrderBasis& o, std::uint64_t max_index, unsigned workers = 1);

/// All five ideal-correspondence checks for every reduced generator of index <= max_index.
SuiteOutcome suite_ideal_correspondence(const OrderBasis& o, std::uint64_t max_index, unsigned workers = 1);

/// Σ on Z^3, Γ_fcc and Γ_bcc coincide for n seeded random reduced q in J
/// with index <= max_index.
SuiteOutcome suite_cubic_index(std::size_t n, std::uint64_t seed, std::uint64_t max_index);

/// zeta_identity_check up to M.
SuiteOutcome suite_zeta(SeriesCase c, std::size_t M);

/// Prime-power criterion, representation search and f(m) != 0 agree for m <= M.
SuiteOutcome suite_spectrum(SeriesCase c, std::size_t M);

/// count_csms(o, m) equals f(m) for all m <= max_index.
SuiteOutcome suite_counts(const OrderBasis& o, std::uint64_t max_index, unsigned workers = 1);

}  // namespace csl
