#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "permrep/sims.hpp"
#include "permrep/transversal.hpp"

namespace permrep {

struct BoundViolation {
  int level = 0;  // 0 for whole-system bounds
  std::string what;
};

// Outcome of checking a finished system against the structural bounds:
// s(k) <= k, t(k) <= 2k-3 for k >= 2, t(k) <= theta(g), the number of
// levels with s(k) > 1 at most theta(g), and g >= P(n, sum of (s(k)-1)).
struct BoundReport {
  int n = 0;
  BigInt g;
  long long theta_g = 0;
  long long l_n_g = 0;  // min(n, theta(g))
  long long sum_s_minus_1 = 0;
  BigInt minimal_product_bound;
  bool s_at_maximum = false;  // sum hit n(n-1)/2, every slot is filled
  double log_n_g = 0.0;
  std::vector<BoundViolation> violations;

  bool ok() const { return violations.empty(); }
};

// One benchmark cell: a family instance built under one strategy.
struct BenchRow {
  std::string family;
  std::string label;
  int n = 0;
  bool seeded = false;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::Recursive;
  long long mult_cost_units = 0;
  long long product_tests = 0;
  long long b_invocations = 0;
  long long slots_filled = 0;
  BigInt order;
  long long theta_g = 0;
  double wall_ms = 0.0;
};

// Cost-growth summary along a doubling chain of sizes. costs holds the
// mult_cost_units per size, averaged over seeds for seeded families;
// pairwise_exponents[i] = log(costs[i+1]/costs[i]) / log(sizes[i+1]/sizes[i]),
// which for exact doublings is the base-2 log of the cost ratio.
struct GrowthFit {
  std::string label;
  std::vector<int> sizes;
  std::vector<double> costs;
  std::vector<double> pairwise_exponents;
};

// Number of prime divisors of N counted with multiplicity (theta(1) = 0).
// Trial division; group orders only ever carry small primes.
// Throws std::invalid_argument for N < 1.
long long theta(const BigInt& N);

// P(n,s): the minimum of prod s_k over all choices 1 <= s_k <= k with
// sum (s_k - 1) = s. Computed by the closed form r * n!/q! where
// n(n-1)/2 - s - 1 = q(q-1)/2 - r with 1 <= r < q <= n. For 0 <= s < n this
// is s+1. Throws std::out_of_range unless 0 <= s < n(n-1)/2.
BigInt minimal_product(int n, long long s);

// Evaluate every bound above against a finished system. Violations are
// returned as data, not thrown.
BoundReport check_bounds(const TransversalSystem& sys);

// Build one family instance per (size, seed) cell under the strategy and
// record its statistics. Unseeded families produce one row per size and
// ignore the seed list; stairs-random produces one row per (size, seed) and
// substitutes {0} when no seeds are given.
std::vector<BenchRow> run_bench(const std::string& family,
                                const std::vector<int>& sizes,
                                Strategy strategy,
                                const std::vector<std::uint64_t>& seeds = {});

// Aggregate rows (mean cost per size, then pairwise exponents). The rows
// must cover every size in the list.
GrowthFit fit_rows(const std::string& label, const std::vector<int>& sizes,
                   const std::vector<BenchRow>& rows);

// run_bench + fit_rows in one call.
GrowthFit growth_fit(const std::string& family, const std::vector<int>& sizes,
                     Strategy strategy,
                     const std::vector<std::uint64_t>& seeds = {});

// CSV with header family,label,n,seed,strategy,mult_cost_units,
// product_tests,b_invocations,slots_filled,order,theta_g,wall_ms.
// The seed field is empty for unseeded rows; labels are quoted as needed.
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace permrep
