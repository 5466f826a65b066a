#include "permrep/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace permrep {

namespace {

long long theta_u64(std::uint64_t m) {
  long long count = 0;
  for (std::uint64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    while (m % d == 0) {
      m /= d;
      ++count;
    }
  }
  if (m > 1) ++count;
  return count;
}

}  // namespace

long long theta(const BigInt& N) {
  if (N < 1) throw std::invalid_argument("theta: N must be >= 1");
  if (N <= std::numeric_limits<std::uint64_t>::max())
    return theta_u64(static_cast<std::uint64_t>(N));
  // Big orders are products of many small primes; peel those off first and
  // finish on the 64-bit path once the remainder fits.
  BigInt m = N;
  long long count = 0;
  for (BigInt d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      m /= d;
      ++count;
    }
    if (m <= std::numeric_limits<std::uint64_t>::max())
      return count + theta_u64(static_cast<std::uint64_t>(m));
  }
  if (m > 1) ++count;
  return count;
}

BigInt minimal_product(int n, long long s) {
  const long long smax = n < 2 ? 0 : static_cast<long long>(n) * (n - 1) / 2;
  if (s < 0 || s >= smax)
    throw std::out_of_range("minimal_product: s must satisfy 0 <= s < n(n-1)/2");
  const long long capacity = smax - s - 1;
  // Unique q with q(q-1)/2 - (q-1) <= capacity < q(q-1)/2, giving r in [1, q-1].
  long long q = 2;
  while (q * (q - 1) / 2 <= capacity) ++q;
  const long long r = q * (q - 1) / 2 - capacity;
  BigInt out = r;
  for (long long i = q + 1; i <= n; ++i) out *= i;
  return out;
}

BoundReport check_bounds(const TransversalSystem& sys) {
  BoundReport rep;
  rep.n = sys.degree();
  rep.g = order(sys);
  rep.theta_g = theta(rep.g);
  rep.l_n_g = std::min<long long>(rep.n, rep.theta_g);

  long long busy_levels = 0;
  for (int k = 1; k <= rep.n; ++k) {
    const int s = sys.s(k);
    const int t = sys.t(k);
    if (s > k)
      rep.violations.push_back({k, "s(k) exceeds k"});
    if (k >= 2 && t > 2 * k - 3)
      rep.violations.push_back({k, "t(k) exceeds 2k-3"});
    if (t > rep.theta_g)
      rep.violations.push_back({k, "t(k) exceeds theta(g)"});
    rep.sum_s_minus_1 += s - 1;
    if (s > 1) ++busy_levels;
  }
  if (busy_levels > rep.theta_g)
    rep.violations.push_back({0, "levels with s(k) > 1 exceed theta(g)"});

  const long long smax = static_cast<long long>(rep.n) * (rep.n - 1) / 2;
  if (rep.n < 2) {
    rep.minimal_product_bound = 1;
  } else if (rep.sum_s_minus_1 == smax) {
    // Every slot is filled; the minimum product is forced to n!.
    rep.s_at_maximum = true;
    BigInt fact = 1;
    for (int i = 2; i <= rep.n; ++i) fact *= i;
    rep.minimal_product_bound = fact;
  } else {
    rep.minimal_product_bound = minimal_product(rep.n, rep.sum_s_minus_1);
  }
  if (rep.g < rep.minimal_product_bound)
    rep.violations.push_back({0, "order below the minimal product bound"});

  if (rep.n >= 2) {
    using Quad = boost::multiprecision::cpp_bin_float_quad;
    const Quad logg = log(Quad(rep.g));
    rep.log_n_g = static_cast<double>(logg / log(Quad(rep.n)));
  }
  return rep;
}

std::vector<BenchRow> run_bench(const std::string& family,
                                const std::vector<int>& sizes,
                                Strategy strategy,
                                const std::vector<std::uint64_t>& seeds) {
  const bool seeded = family == "stairs-random";
  std::vector<std::uint64_t> use_seeds = seeded ? seeds : std::vector<std::uint64_t>{};
  if (seeded && use_seeds.empty()) use_seeds = {0};
  if (!seeded) use_seeds = {0};  // single pass, seed ignored by the family

  std::vector<BenchRow> rows;
  for (const int n : sizes) {
    for (const std::uint64_t seed : use_seeds) {
      const GeneratorSet gens = family_instance(family, n, seed);
      const auto start = std::chrono::steady_clock::now();
      auto [sys, stats] = build(gens, strategy);
      const auto stop = std::chrono::steady_clock::now();

      BenchRow row;
      row.family = family;
      row.label = gens.label;
      row.n = n;
      row.seeded = seeded;
      row.seed = seed;
      row.strategy = strategy;
      row.mult_cost_units = stats.mult_cost_units;
      row.product_tests = stats.product_tests;
      row.b_invocations = stats.b_invocations;
      row.slots_filled = stats.slots_filled;
      row.order = order(sys);
      row.theta_g = theta(row.order);
      row.wall_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

GrowthFit fit_rows(const std::string& label, const std::vector<int>& sizes,
                   const std::vector<BenchRow>& rows) {
  GrowthFit fit;
  fit.label = label;
  fit.sizes = sizes;
  for (const int n : sizes) {
    double total = 0.0;
    long long count = 0;
    for (const BenchRow& row : rows) {
      if (row.n != n) continue;
      total += static_cast<double>(row.mult_cost_units);
      ++count;
    }
    if (count == 0)
      throw std::invalid_argument("fit_rows: no rows for size " +
                                  std::to_string(n));
    fit.costs.push_back(total / static_cast<double>(count));
  }
  for (std::size_t i = 0; i + 1 < fit.sizes.size(); ++i) {
    const double ratio = fit.costs[i + 1] / fit.costs[i];
    const double size_ratio =
        static_cast<double>(fit.sizes[i + 1]) / fit.sizes[i];
    fit.pairwise_exponents.push_back(std::log(ratio) / std::log(size_ratio));
  }
  return fit;
}

GrowthFit growth_fit(const std::string& family, const std::vector<int>& sizes,
                     Strategy strategy,
                     const std::vector<std::uint64_t>& seeds) {
  return fit_rows(family + ":" + strategy_name(strategy), sizes,
                  run_bench(family, sizes, strategy, seeds));
}

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "family,label,n,seed,strategy,mult_cost_units,product_tests,"
        "b_invocations,slots_filled,order,theta_g,wall_ms\n";
  for (const BenchRow& row : rows) {
    os << csv_quote(row.family) << ',' << csv_quote(row.label) << ',' << row.n
       << ',';
    if (row.seeded) os << row.seed;
    os << ',' << strategy_name(row.strategy) << ',' << row.mult_cost_units
       << ',' << row.product_tests << ',' << row.b_invocations << ','
       << row.slots_filled << ',' << row.order.str() << ',' << row.theta_g
       << ',';
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", row.wall_ms);
    os << buf << '\n';
  }
}

}  // namespace permrep
