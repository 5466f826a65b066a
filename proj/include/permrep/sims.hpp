#pragma once

#include <utility>
#include <vector>

#include "permrep/families.hpp"
#include "permrep/transversal.hpp"

namespace permrep {

// The two ways step A2 can schedule its products.
//
// Recursive: every call of A_k runs B_k(sigma*p) over the live transversal
// row, and filling a slot additionally cascades B_k(p*tau) over the current
// T(k). Descents B -> A nest natively, so depth grows with the degree; fine
// for a few hundred levels, and every instance in this repository stays far
// below that.
//
// Iterative: persistent per-column counts c(k,i) remember how many
// generator products each column has been through, so across the whole
// build each (column, generator) pair at a level is tested exactly once.
// Descents are managed on an explicit frame stack, no native recursion.
enum class Strategy { Recursive, Iterative };

struct LevelCounters {
  long long b_invocations = 0;
  long long product_tests = 0;
  long long mult_cost_units = 0;
  long long slots_filled = 0;
};

struct BuildStats {
  Strategy strategy = Strategy::Recursive;
  long long b_invocations = 0;    // number of B_k calls
  long long product_tests = 0;    // sigma*tau products handed to B_k
  long long mult_cost_units = 0;  // sum of k over non-identity multiplications
  long long slots_filled = 0;
  long long membership_tests = 0;  // top-level generator sifts
  std::vector<LevelCounters> per_level;  // indexed by level, entry 0 unused

  void ensure_levels(int n) {
    if (per_level.size() < static_cast<std::size_t>(n) + 1)
      per_level.resize(n + 1);
  }
};

// Sift p; if it is not already a member, run algorithm A at the system's
// top level so every level's generator list and transversal row absorb it.
// Identity and duplicate generators are caught by the sift and skipped.
void insert_generator(TransversalSystem& sys, const Perm& p,
                      Strategy strategy, BuildStats& stats);

// Algorithm A_k: append p to T(k) (step A1), then test the products
// sigma*tau of step A2 under the chosen strategy until the structure is
// up to date again. Requires p in Pi(k) and p not in Gamma(k).
void algorithm_A(TransversalSystem& sys, int k, const Perm& p,
                 Strategy strategy, BuildStats& stats);

// Algorithm B_k for one product p (known to lie in <T(k)>): with j = p(k),
// either fill the empty slot sigma_{kj} (step B2), or reduce to
// p * sigma_{kj}^- and accept if that lies in Gamma(k-1) (step B3), or
// descend into A_{k-1} with the reduced perm (step B4). Requires k >= 2.
void algorithm_B(TransversalSystem& sys, int k, const Perm& p,
                 Strategy strategy, BuildStats& stats);

// Insert every generator in order; returns the finished system and the
// accumulated statistics.
std::pair<TransversalSystem, BuildStats> build(const GeneratorSet& gens,
                                               Strategy strategy);

inline const char* strategy_name(Strategy s) {
  return s == Strategy::Recursive ? "recursive" : "iterative";
}

}  // namespace permrep
