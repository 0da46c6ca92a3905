#include "csl/verify.hpp"

#include <mutex>
#include <random>
#include <sstream>

#include "csl/detail/parallel.hpp"
#include "csl/error.hpp"

namespace csl {

namespace {

class FailureLog {
 public:
  explicit FailureLog(SuiteOutcome& out) : out_(out) {}
  void fail(const std::string& what) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (out_.passed) out_.detail = what;
    out_.passed = false;
  }

 private:
  SuiteOutcome& out_;
  std::mutex mutex_;
};

std::vector<std::pair<std::uint64_t, Quat>> reduced_generators(const OrderBasis& o, std::uint64_t max_index) {
  std::vector<std::pair<std::uint64_t, Quat>> all;
  for (std::uint64_t m = 1; m <= max_index; ++m) {
    for (auto& q : enumerate_by_index(o, m, {std::max(max_index, kDefaultCap), true})) all.emplace_back(m, std::move(q));
  }
  return all;
}

}  // namespace

SuiteOutcome suite_formula_oracle(const OrderBasis& o, std::uint64_t max_index, unsigned workers) {
  SuiteOutcome out;
  out.name = "formula-oracle/" + o.name();
  FailureLog log(out);
  const OModule gamma = gamma_of(o);
  const auto gens = reduced_generators(o, max_index);
  out.cases = gens.size();
  detail::parallel_for(gens.size(), workers, [&](std::size_t t) {
    const auto& [m, q] = gens[t];
    const mpz_class formula = sigma_index(o, q);
    const mpz_class brute = csm_bruteforce(gamma, q).sigma;
    if (formula != brute || formula != m) {
      log.fail("q = " + to_string(q) + ": sigma_index " + formula.get_str() + ", intersection index " +
               brute.get_str() + ", m = " + std::to_string(m));
    }
  });
  return out;
}

SuiteOutcome suite_ideal_correspondence(const OrderBasis& o, std::uint64_t max_index, unsigned workers) {
  SuiteOutcome out;
  out.name = "ideal-correspondence/" + o.name();
  FailureLog log(out);
  const auto gens = reduced_generators(o, max_index);
  out.cases = gens.size();
  detail::parallel_for(gens.size(), workers, [&](std::size_t t) {
    const Quat& q = gens[t].second;
    const CorrespondenceReport r = verify_ideal_correspondence(o, q);
    if (!r.all()) {
      std::ostringstream s;
      s << "q = " << q << ": im " << r.im_equal << ", sum " << r.sum_equal << ", [O:E] " << r.index_order
        << ", [E:qO] " << r.index_ideal << ", qO∩K " << r.scalar_part;
      log.fail(s.str());
    }
  });
  return out;
}

SuiteOutcome suite_cubic_index(std::size_t n, std::uint64_t seed, std::uint64_t max_index) {
  SuiteOutcome out;
  out.name = "cubic-index";
  const OrderBasis j = OrderBasis::hurwitz();
  const OModule z3 = lattice(LatticeKind::Cubic);
  const OModule fcc = lattice(LatticeKind::Fcc);
  const OModule bcc = lattice(LatticeKind::Bcc);
  std::mt19937_64 rng(seed);
  std::size_t attempts = 0;
  while (out.cases < n) {
    if (++attempts > 1000 * n) {
      out.passed = false;
      out.detail = "could not draw enough rotations within the index bound";
      break;
    }
    const Quat raw = random_element(j, rng, 3);
    if (raw.is_scalar()) continue;
    const Quat q = j.reduce_generator(raw);
    const mpz_class sigma = sigma_index(j, q);
    if (sigma > max_index) continue;
    ++out.cases;
    const mpz_class a = csm_bruteforce(z3, q).sigma;
    const mpz_class b = csm_bruteforce(fcc, q).sigma;
    const mpz_class c = csm_bruteforce(bcc, q).sigma;
    if (a != b || b != c || c != sigma) {
      out.passed = false;
      out.detail = "q = " + to_string(q) + ": Z3 " + a.get_str() + ", fcc " + b.get_str() + ", bcc " + c.get_str() +
                   ", formula " + sigma.get_str();
      break;
    }
  }
  return out;
}

SuiteOutcome suite_zeta(SeriesCase c, std::size_t M) {
  SuiteOutcome out;
  out.name = "zeta/" + std::string(to_string(c));
  out.cases = M;
  out.passed = zeta_identity_check(c, M);
  if (!out.passed) out.detail = "coefficient arrays disagree below " + std::to_string(M);
  return out;
}

SuiteOutcome suite_spectrum(SeriesCase c, std::size_t M) {
  SuiteOutcome out;
  out.name = "spectrum/" + std::string(to_string(c));
  const CoeffSeries f = phi_coefficients(c, M);
  for (std::size_t m = 1; m <= M; ++m) {
    ++out.cases;
    const bool a = spectrum_member(c, m);
    const bool b = spectrum_representation(c, m).has_value();
    const bool d = f(m) != 0;
    if (a != b || b != d) {
      out.passed = false;
      out.detail = "m = " + std::to_string(m) + ": criterion " + std::to_string(a) + ", representation " +
                   std::to_string(b) + ", f(m) " + std::to_string(f(m));
      break;
    }
  }
  return out;
}

SuiteOutcome suite_counts(const OrderBasis& o, std::uint64_t max_index, unsigned workers) {
  SuiteOutcome out;
  out.name = "counts/" + o.name();
  const CoeffSeries f = phi_coefficients(series_case_of(o), max_index);
  for (std::uint64_t m = 1; m <= max_index; ++m) {
    ++out.cases;
    const std::size_t got = count_csms(o, m, {std::max(max_index, kDefaultCap), workers}).count();
    if (static_cast<std::int64_t>(got) != f(m)) {
      out.passed = false;
      out.detail = "m = " + std::to_string(m) + ": counted " + std::to_string(got) + ", series " + std::to_string(f(m));
      break;
    }
  }
  return out;
}

}  // namespace csl
