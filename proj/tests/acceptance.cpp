// Acceptance suite: eleven checks, one PASS/FAIL line each, covering the
// golden tables, cost counts, closed forms, oracle equivalence, structural
// bounds, and growth exponents of the whole engine. Exits nonzero if any
// check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "permrep/analysis.hpp"
#include "permrep/families.hpp"
#include "permrep/sims.hpp"

using namespace permrep;

namespace {

int failures = 0;

// Every system any criterion builds is also pushed through check_bounds;
// criterion 9 reports the tally.
long long systems_checked = 0;
std::vector<std::string> bound_violations;

std::pair<TransversalSystem, BuildStats> build_checked(
    const GeneratorSet& gens, Strategy strategy) {
  auto result = build(gens, strategy);
  ++systems_checked;
  const BoundReport report = check_bounds(result.first);
  for (const BoundViolation& v : report.violations)
    bound_violations.push_back(gens.label + " (" + strategy_name(strategy) +
                               "): level " + std::to_string(v.level) + ": " +
                               v.what);
  return result;
}

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void report(int number, bool ok, const std::string& text) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", number,
              text.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Perm random_perm(std::mt19937_64& rng, int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  for (int i = degree - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(images[i], images[j]);
  }
  return Perm(std::move(images));
}

// ---- criterion 1: golden tables for the two degree-14 doubling perms ----

void criterion_1() {
  Timer timer;
  bool ok = true;
  std::ostringstream why;

  const Perm pi = doubling_cycle_perm(4, false).perms[0];
  const Perm pbar = doubling_cycle_perm(4, true).perms[0];

  for (const Strategy strategy : {Strategy::Recursive, Strategy::Iterative}) {
    auto [psys, pstats] = build_checked(doubling_cycle_perm(4, false), strategy);
    if (order(psys) != 8 || psys.s(14) != 8 || psys.t(14) != 1 ||
        psys.gen(14, 1) != pi)
      ok = false, why << " pi-shape";
    for (int j = 1; j < 8; ++j)
      if (!psys.slot_defined(14, j) || psys.slot_direct(14, j) != power(pi, j))
        ok = false, why << " pi-slot-" << j;
    for (int k = 1; k < 14; ++k)
      if (psys.t(k) != 0 || psys.s(k) != 1) ok = false, why << " pi-level-" << k;

    auto [bsys, bstats] = build_checked(doubling_cycle_perm(4, true), strategy);
    if (order(bsys) != 8) ok = false, why << " pbar-order";
    const std::vector<std::pair<std::pair<int, int>, Perm>> table = {
        {{14, 11}, pbar}, {{13, 9}, power(pbar, 2)}, {{12, 4}, power(pbar, 4)}};
    long long defined = 0;
    for (int k = 2; k <= 14; ++k)
      for (int j = 1; j < k; ++j)
        if (bsys.slot_defined(k, j)) ++defined;
    if (defined != 3) ok = false, why << " pbar-slot-count";
    for (const auto& [kj, value] : table) {
      if (!bsys.slot_defined(kj.first, kj.second) ||
          bsys.slot_direct(kj.first, kj.second) != value)
        ok = false, why << " pbar-slot";
      if (bsys.t(kj.first) != 1 || bsys.gen(kj.first, 1) != value)
        ok = false, why << " pbar-gens";
    }
  }

  const double elapsed = timer.seconds();
  if (elapsed >= 1.0) ok = false, why << " overran-1s-budget";
  std::ostringstream line;
  line << "degree-14 golden tables, both strategies (" << elapsed << "s)"
       << why.str();
  report(1, ok, line.str());
}

// ---- criterion 2: sift multiplication counts in the two systems ----

void criterion_2() {
  bool ok = true;
  std::ostringstream why;

  const Perm pi = doubling_cycle_perm(4, false).perms[0];
  auto [psys, pstats] =
      build_checked(doubling_cycle_perm(4, false), Strategy::Recursive);
  for (int r = 1; r <= 16; ++r) {
    const MembershipTrace trace = sift(psys, power(pi, r));
    if (!trace.member || trace.path.size() > 1 || trace.cost_units > 14)
      ok = false, why << " pi-power-" << r;
  }

  const Perm pbar = doubling_cycle_perm(4, true).perms[0];
  auto [bsys, bstats] =
      build_checked(doubling_cycle_perm(4, true), Strategy::Recursive);
  const MembershipTrace trace = sift(bsys, power(pbar, 7));
  if (!trace.member || trace.path.size() != 3 ||
      trace.path != std::vector<std::pair<int, int>>{{14, 11}, {13, 9}, {12, 4}})
    ok = false, why << " pbar-seventh-path";

  std::ostringstream line;
  line << "sift costs: powers need <=1 multiplication, the cascade system "
          "needs exactly 3"
       << why.str();
  report(2, ok, line.str());
}

// ---- criterion 3: slot counts scale as n/2 versus lg n ----

void criterion_3() {
  bool ok = true;
  std::ostringstream why;
  for (int h = 4; h <= 8; ++h) {
    for (const Strategy strategy : {Strategy::Recursive, Strategy::Iterative}) {
      auto [psys, pstats] =
          build_checked(doubling_cycle_perm(h, false), strategy);
      if (pstats.slots_filled != (1LL << (h - 1)) - 1)
        ok = false, why << " h=" << h << "-plain";
      auto [bsys, bstats] =
          build_checked(doubling_cycle_perm(h, true), strategy);
      if (bstats.slots_filled != h - 1)
        ok = false, why << " h=" << h << "-relabeled";
    }
  }
  report(3, ok,
         "doubling slots: 2^(h-1)-1 versus h-1 for h=4..8, both strategies" +
             why.str());
}

// ---- criterion 4: closed-form transversals for the classic families ----

bool adjacent_form_ok(const TransversalSystem& sys, int n) {
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j) {
      std::string text = "[";
      for (int x = j; x <= k; ++x) text += std::to_string(x) + (x < k ? "," : "]");
      if (!sys.slot_defined(k, j) ||
          sys.slot_direct(k, j) != parse_cycles(text, n))
        return false;
    }
  return true;
}

bool cycle_form_ok(const TransversalSystem& sys, int n) {
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j) {
      std::vector<int> images(n);
      for (int x = 1; x <= n; ++x) {
        if (x > k)
          images[x - 1] = x;
        else if (x > k - j)
          images[x - 1] = x - (k - j);
        else
          images[x - 1] = k + 1 - x;
      }
      if (!sys.slot_defined(k, j) || sys.slot_direct(k, j) != Perm(images))
        return false;
    }
  return true;
}

bool two_gen_form_ok(const TransversalSystem& sys, int n) {
  for (int k = 2; k <= n; ++k) {
    std::string text = "[";
    for (int x = 1; x <= k; ++x) text += std::to_string(x) + (x < k ? "," : "]");
    const Perm sigma_k = parse_cycles(text, n);
    for (int j = 1; j < k; ++j)
      if (!sys.slot_defined(k, j) ||
          sys.slot_direct(k, j) != power(sigma_k, j))
        return false;
  }
  return true;
}

void criterion_4() {
  bool ok = true;
  std::ostringstream why;
  for (int n = 2; n <= 12; ++n) {
    for (const Strategy strategy : {Strategy::Recursive, Strategy::Iterative}) {
      auto [adj, s1] = build_checked(
          staircase_family(n, StaircaseKind::AdjacentTransposition), strategy);
      if (!adjacent_form_ok(adj, n))
        ok = false, why << " adjacent-n=" << n << "-" << strategy_name(strategy);
      auto [cyc, s2] = build_checked(
          staircase_family(n, StaircaseKind::DescendingCycle), strategy);
      if (!cycle_form_ok(cyc, n))
        ok = false, why << " cycle-n=" << n << "-" << strategy_name(strategy);
    }
    auto [two, s3] = build_checked(two_generator_family(n), Strategy::Recursive);
    if (!two_gen_form_ok(two, n)) ok = false, why << " two-gen-n=" << n;
  }
  report(4, ok,
         "closed-form transversals for the three classic families, n<=12" +
             why.str());
}

// ---- criterion 5: order equals the brute-force closure size ----

void criterion_5() {
  Timer timer;
  bool ok = true;
  std::ostringstream why;
  std::mt19937_64 rng(1905);
  int sets = 0;

  auto check_order = [&](const GeneratorSet& gens, const char* tag) {
    ++sets;
    const std::size_t expected = brute_force_closure(gens, 50000).size();
    for (const Strategy strategy : {Strategy::Recursive, Strategy::Iterative}) {
      auto [sys, stats] = build_checked(gens, strategy);
      if (order(sys) != BigInt(expected)) {
        ok = false;
        why << " " << tag << "(" << gens.label << ")";
      }
    }
  };

  for (int n = 2; n <= 6; ++n) {
    check_order(two_generator_family(n), "two-gen");
    check_order(staircase_family(n, StaircaseKind::AdjacentTransposition),
                "adjacent");
    check_order(staircase_family(n, StaircaseKind::DescendingCycle), "cycle");
  }
  check_order(sims_example(), "classical-example");
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + static_cast<int>(rng() % 5);  // 2..6
    check_order(staircase_family(n, StaircaseKind::Random, rng()), "random-stairs");
  }
  for (int i = 0; i < 50; ++i) {
    GeneratorSet gens;
    gens.degree = 3 + static_cast<int>(rng() % 4);  // 3..6
    gens.label = "random-set-" + std::to_string(i);
    const int count = 2 + static_cast<int>(rng() % 2);
    for (int g = 0; g < count; ++g)
      gens.perms.push_back(random_perm(rng, gens.degree));
    check_order(gens, "random-set");
  }

  const double elapsed = timer.seconds();
  if (elapsed >= 60.0) ok = false, why << " overran-60s-budget";
  std::ostringstream line;
  line << "order matches brute-force closure on " << sets
       << " generator sets, both strategies (" << elapsed << "s)" << why.str();
  report(5, ok, line.str());
}

// ---- criterion 6: transposition products have order 2^(n/2) ----

void criterion_6() {
  bool ok = true;
  std::ostringstream why;
  for (const int n : {4, 8, 12}) {
    for (const Strategy strategy : {Strategy::Recursive, Strategy::Iterative}) {
      auto [sys, stats] =
          build_checked(transposition_products_family(n), strategy);
      if (order(sys) != (BigInt(1) << (n / 2))) ok = false, why << " n=" << n;
    }
  }
  report(6, ok, "transposition products reach order 2^(n/2) for n=4,8,12" +
                    why.str());
}

// ---- criterion 7: the 54-versus-40 product-test comparison ----

void criterion_7() {
  bool ok = true;
  std::ostringstream detail;

  const GeneratorSet forward = sims_example();
  GeneratorSet reversed = forward;
  std::swap(reversed.perms[0], reversed.perms[1]);
  reversed.label += " (reversed)";

  std::vector<std::string> forty;
  for (const GeneratorSet* gens :
       std::initializer_list<const GeneratorSet*>{&forward, &reversed}) {
    for (const Strategy strategy : {Strategy::Recursive, Strategy::Iterative}) {
      auto [sys, stats] = build_checked(*gens, strategy);
      const std::string combo =
          std::string(gens == &forward ? "forward" : "reversed") + "/" +
          strategy_name(strategy);
      if (stats.product_tests > 54) {
        ok = false;
        detail << " " << combo << "=" << stats.product_tests << ">54";
      }
      if (stats.product_tests == 40) forty.push_back(combo);
    }
  }
  if (forty.empty()) {
    ok = false;
    detail << " no combination hits 40";
  } else {
    detail << " 40 products under:";
    for (const std::string& combo : forty) detail << " " << combo;
  }
  report(7, ok,
         "degree-7 example needs <=54 products everywhere and exactly 40 "
         "somewhere —" +
             detail.str());
}

// ---- criterion 8: growth exponents of the cost metric ----

void criterion_8() {
  Timer timer;
  bool ok = true;
  std::ostringstream detail;

  auto within = [&](const GrowthFit& fit, double lo, double hi,
                    const char* tag) {
    detail << " " << tag << "=[";
    for (std::size_t i = 0; i < fit.pairwise_exponents.size(); ++i) {
      const double e = fit.pairwise_exponents[i];
      detail << (i ? "," : "") << std::round(e * 1000) / 1000;
      if (e < lo || e > hi) ok = false;
    }
    detail << "]";
  };

  within(growth_fit("two-gen", {32, 64, 128}, Strategy::Recursive), 2.5, 3.5,
         "two-gen");
  within(growth_fit("stairs-adjacent", {16, 32, 64}, Strategy::Recursive), 3.5,
         4.5, "adjacent");
  within(growth_fit("stairs-cycle", {16, 32, 64}, Strategy::Recursive), 3.5,
         4.5, "cycle");

  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 1; s <= 20; ++s) seeds.push_back(s);
  const GrowthFit random_fit =
      growth_fit("stairs-random", {12, 24, 48}, Strategy::Recursive, seeds);
  const double final_exponent = random_fit.pairwise_exponents.back();
  detail << " random-final=" << std::round(final_exponent * 1000) / 1000;
  if (final_exponent < 4.3) ok = false, detail << "<4.3";

  const double elapsed = timer.seconds();
  if (elapsed >= 300.0) ok = false, detail << " overran-5min-budget";
  std::ostringstream line;
  line << "cost growth exponents (" << elapsed << "s):" << detail.str();
  report(8, ok, line.str());
}

// ---- criterion 9: structural bounds on every system built above ----

void criterion_9() {
  // Also push an explicit matrix through, independent of earlier criteria.
  std::mt19937_64 rng(77);
  std::vector<GeneratorSet> matrix;
  for (int n = 4; n <= 10; ++n) {
    matrix.push_back(two_generator_family(n));
    matrix.push_back(staircase_family(n, StaircaseKind::AdjacentTransposition));
    matrix.push_back(staircase_family(n, StaircaseKind::DescendingCycle));
    matrix.push_back(staircase_family(n, StaircaseKind::Random, rng()));
  }
  for (int n = 4; n <= 12; n += 2)
    matrix.push_back(transposition_products_family(n));
  for (int i = 0; i < 20; ++i) {
    GeneratorSet gens;
    gens.degree = 4 + static_cast<int>(rng() % 4);
    gens.label = "bounds-random-" + std::to_string(i);
    for (int g = 0; g < 2; ++g)
      gens.perms.push_back(random_perm(rng, gens.degree));
    matrix.push_back(gens);
  }
  for (const GeneratorSet& gens : matrix)
    for (const Strategy strategy : {Strategy::Recursive, Strategy::Iterative}) {
      auto [sys, stats] = build_checked(gens, strategy);
      (void)sys;
    }

  const bool ok = bound_violations.empty();
  std::ostringstream line;
  line << "bounds (s<=k, t<=2k-3, t<=theta, busy-levels<=theta, g>=P) on "
       << systems_checked << " systems";
  for (const std::string& v : bound_violations) line << " VIOLATION: " << v;
  report(9, ok, line.str());
}

// ---- criterion 10: minimal_product against exhaustive minimization ----

void criterion_10() {
  bool ok = true;
  std::ostringstream why;
  for (int n = 2; n <= 6; ++n) {
    std::map<int, BigInt> best{{0, 1}};
    for (int k = 1; k <= n; ++k) {
      std::map<int, BigInt> next;
      for (const auto& [sum, prod] : best)
        for (int sk = 1; sk <= k; ++sk) {
          const int nsum = sum + sk - 1;
          const BigInt nprod = prod * sk;
          auto it = next.find(nsum);
          if (it == next.end() || nprod < it->second) next[nsum] = nprod;
        }
      best = std::move(next);
    }
    for (int s = 0; s < n * (n - 1) / 2; ++s)
      if (minimal_product(n, s) != best.at(s)) {
        ok = false;
        why << " P(" << n << "," << s << ")";
      }
  }
  report(10, ok,
         "minimal transversal-size product matches exhaustive search, n<=6" +
             why.str());
}

// ---- criterion 11: randomized property suites ----

void criterion_11() {
  bool ok = true;
  std::ostringstream why;
  std::mt19937_64 rng(31337);

  long long algebra_cases = 0;
  for (int round = 0; round < 500; ++round) {
    const int degree = 1 + static_cast<int>(rng() % 16);
    const Perm p = random_perm(rng, degree);
    const Perm q = random_perm(rng, degree);
    const Perm r = random_perm(rng, degree);
    if (parse_cycles(format_cycles(p), degree) != p)
      ok = false, why << " round-trip";
    if (compose(compose(p, q), r) != compose(p, compose(q, r)))
      ok = false, why << " associativity";
    if (!compose(p, inverse(p)).is_identity()) ok = false, why << " inverse";
    algebra_cases += 3;
  }
  if (algebra_cases < 1000) ok = false, why << " too-few-cases";

  long long closure_pairs = 0;
  std::vector<GeneratorSet> matrix = {
      sims_example(), two_generator_family(8),
      staircase_family(7, StaircaseKind::DescendingCycle),
      staircase_family(7, StaircaseKind::Random, 11),
      transposition_products_family(10), doubling_cycle_perm(4, true)};
  for (const GeneratorSet& gens : matrix) {
    auto [sys, stats] = build_checked(gens, Strategy::Iterative);
    std::vector<Perm> stored;
    for (int k = 2; k <= sys.degree(); ++k)
      for (int j = 1; j < k; ++j)
        if (sys.slot_defined(k, j)) stored.push_back(sys.slot_direct(k, j));
    auto element = [&] {
      Perm p = stored[rng() % stored.size()];
      return compose(p, stored[rng() % stored.size()]);
    };
    for (int round = 0; round < 120; ++round) {
      if (!sift(sys, compose(element(), element())).member) {
        ok = false;
        why << " closure(" << gens.label << ")";
        break;
      }
      ++closure_pairs;
    }
  }
  std::ostringstream line;
  line << "property suites: " << algebra_cases << " algebra cases, "
       << closure_pairs << " closure pairs" << why.str();
  report(11, ok, line.str());
}

}  // namespace

int main() {
  Timer total;
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d/11 criteria passed (%.1fs)\n", 11 - failures,
              total.seconds());
  return failures == 0 ? 0 : 1;
}
