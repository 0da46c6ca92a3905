// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "csl/csm.hpp"
#include "csl/orders.hpp"
#include "csl/series.hpp"
#include "csl/verify.hpp"

using namespace csl;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

bool run_criterion(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < limit_s, "exceeded the time limit");
  std::printf("%s %2d %-34s %8.2f s (limit %g s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs, limit_s,
              c.note.str().empty() ? "" : "  ", c.note.str().c_str());
  std::fflush(stdout);
  return c.ok;
}

void expect_counts(Check& c, const OrderBasis& o, const std::vector<std::uint64_t>& ms,
                   const std::vector<std::size_t>& want) {
  for (std::size_t t = 0; t < ms.size(); ++t) {
    const std::size_t got = count_csms(o, ms[t], {kDefaultCap, workers()}).count();
    c.expect(got == want[t], o.name() + " m=" + std::to_string(ms[t]) + " counted " + std::to_string(got) + " ");
  }
}

void expect_nonzero(Check& c, SeriesCase sc, std::size_t M, const std::vector<std::pair<std::size_t, std::int64_t>>& nz) {
  const auto start = std::chrono::steady_clock::now();
  const CoeffSeries f = phi_coefficients(sc, M);
  c.expect(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 1.0, "coefficients took over 1 s ");
  std::vector<std::int64_t> want(M + 1, 0);
  want[1] = 1;
  for (auto [m, v] : nz) want[m] = v;
  for (std::size_t m = 1; m <= M; ++m) c.expect(f(m) == want[m], "f(" + std::to_string(m) + ") = " + std::to_string(f(m)) + " ");
}

void expect_suite(Check& c, const SuiteOutcome& s) { c.expect(s.passed, s.name + ": " + s.detail + " "); }

}  // namespace

int main() {
  const OrderBasis J = OrderBasis::hurwitz();
  const OrderBasis I = OrderBasis::icosian();
  const OrderBasis K = OrderBasis::octahedral();
  bool all = true;

  all &= run_criterion(1, "cubic counts", 10, [&](Check& c) {
    expect_counts(c, J, {1, 3, 5, 7, 9, 11, 13, 15, 17, 19}, {1, 4, 6, 8, 12, 12, 14, 24, 18, 20});
  });

  all &= run_criterion(2, "cubic prime-power law", 1, [&](Check& c) {
    const std::uint64_t M = 1000000;
    const CoeffSeries f = phi_coefficients(SeriesCase::Cub, M);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
      std::uint64_t pr = 1;
      for (int r = 1; r <= 6; ++r) {
        pr *= p;
        const std::int64_t want = p == 2 ? 0 : static_cast<std::int64_t>((p + 1) * (pr / p));
        c.expect(series_coefficient(SeriesCase::Cub, SeriesKind::Phi, pr) == want, "f(" + std::to_string(pr) + ") ");
        if (pr <= M) c.expect(f(pr) == want, "table f(" + std::to_string(pr) + ") ");
      }
    }
  });

  all &= run_criterion(3, "icosian counts and coefficients", 60, [&](Check& c) {
    expect_counts(c, I, {1, 4, 5, 9, 11}, {1, 5, 6, 10, 24});
    expect_nonzero(c, SeriesCase::Ico, 29,
                   {{4, 5}, {5, 6}, {9, 10}, {11, 24}, {16, 20}, {19, 40}, {20, 30}, {25, 30}, {29, 60}});
  });

  all &= run_criterion(4, "octahedral counts and coefficients", 60, [&](Check& c) {
    expect_counts(c, K, {1, 2, 4, 7, 8, 9}, {1, 3, 6, 16, 12, 10});
    expect_nonzero(c, SeriesCase::Oct, 18,
                   {{2, 3}, {4, 6}, {7, 16}, {8, 12}, {9, 10}, {14, 48}, {16, 24}, {17, 36}, {18, 30}});
  });

  all &= run_criterion(5, "formula vs intersection oracle", 300, [&](Check& c) {
    expect_suite(c, suite_formula_oracle(J, 50, workers()));
    expect_suite(c, suite_formula_oracle(I, 20, workers()));
    expect_suite(c, suite_formula_oracle(K, 20, workers()));
  });

  all &= run_criterion(6, "cubic lattices share the index", 30,
                       [&](Check& c) { expect_suite(c, suite_cubic_index(100, 20260101, 99)); });

  all &= run_criterion(7, "ideal correspondence", 300, [&](Check& c) {
    for (const OrderBasis* o : {&J, &I, &K}) expect_suite(c, suite_ideal_correspondence(*o, 20, workers()));
  });

  all &= run_criterion(8, "spectrum equivalence", 30, [&](Check& c) {
    for (SeriesCase s : {SeriesCase::Cub, SeriesCase::Ico, SeriesCase::Oct}) expect_suite(c, suite_spectrum(s, 500));
  });

  all &= run_criterion(9, "zeta identities", 10, [&](Check& c) {
    c.expect(zeta_identity_check(SeriesCase::Cub, 100), "cub ");
    c.expect(zeta_identity_check(SeriesCase::Ico, 50), "ico ");
    c.expect(zeta_identity_check(SeriesCase::Oct, 50), "oct ");
  });

  all &= run_criterion(10, "residues and summatory ratio", 30, [&](Check& c) {
    const double cub = 6.0 / (std::numbers::pi * std::numbers::pi);
    c.expect(std::abs(residue_rho(SeriesCase::Ico) - 0.497089) < 5e-7, "ico ");
    c.expect(std::abs(residue_rho(SeriesCase::Oct) - 0.837559) < 5e-7, "oct ");
    c.expect(std::abs(residue_rho(SeriesCase::Cub) - cub) < 1e-10, "cub ");
    const double ratio = summatory(SeriesCase::Cub, 10000).ratio_value();
    c.expect(std::abs(ratio - cub) < 0.1 * cub, "ratio " + std::to_string(ratio) + " ");
  });

  all &= run_criterion(11, "structural facts", 10, [&](Check& c) {
    std::mt19937_64 rng(7);
    for (const OrderBasis* o : {&J, &I, &K}) {
      const FieldTag t = o->field();
      const OrderBasis L = OrderBasis::lipschitz(t);
      const FieldElem two(t, 2L);
      c.expect(real_part(o->module()) == FieldElem(t, mpq_class(1, 2)), o->name() + " Re ");
      for (const auto& b : o->basis()) c.expect(L.contains(b * two), o->name() + " basis ");
      for (int n = 0; n < 1000; ++n) c.expect(L.contains(random_element(*o, rng, 3) * two), o->name() + " random ");
    }
    c.expect(index_K(J.module(), OrderBasis::lipschitz(FieldTag::Rational).module()).absolute() == 2, "[J:L] ");
    c.expect(index_K(I.module(), OrderBasis::lipschitz(FieldTag::RootFive).module()).absolute() == 16, "[I:L] ");
    c.expect(index_K(K.module(), OrderBasis::lipschitz(FieldTag::RootTwo).module()).absolute() == 16, "[K:L] ");
    c.expect(index_K(lattice(LatticeKind::ModuleB), lattice(LatticeKind::ModuleF)).absolute() == 4, "[MB:MF] ");
    c.expect(index_K(J.module(), right_ideal(J, Quat(FieldTag::Rational, 1, 1, 0, 0))).absolute() == 4, "[J:(1+i)J] ");
  });

  std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
  return all ? 0 : 1;
}
