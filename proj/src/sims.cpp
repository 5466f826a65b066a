#include "permrep/sims.hpp"

#include <cassert>
#include <stdexcept>

namespace permrep {

namespace {

// Shared implementation behind algorithm_A / algorithm_B. All multiplication
// costs are charged here: a product at level k costs k unless one factor is
// the identity (identity transversal columns and identity reductions are
// free), and every reduction a sift performs costs its own level.
struct Engine {
  TransversalSystem& sys;
  BuildStats& stats;

  void charge(int level) {
    stats.mult_cost_units += level;
    stats.per_level[level].mult_cost_units += level;
  }

  void charge_sift(const MembershipTrace& trace) {
    for (const auto& [level, column] : trace.path) {
      (void)column;
      charge(level);
    }
  }

  void count_product(int level) {
    ++stats.product_tests;
    ++stats.per_level[level].product_tests;
  }

  enum class BResult { Filled, Member, Descend };

  // Steps B1 to B3 for the product p at level k. On Descend, residue holds
  // p * sigma_{kj}^-, the perm step B4 passes down.
  BResult b_steps(int k, const Perm& p, Perm& residue) {
    assert(k >= 2 && largest_moved_point(p) <= k);
    ++stats.b_invocations;
    ++stats.per_level[k].b_invocations;

    const int j = p.apply(k);
    if (j != k && !sys.slot_defined(k, j)) {
      sys.fill_slot(k, j, p);
      ++stats.slots_filled;
      ++stats.per_level[k].slots_filled;
      return BResult::Filled;
    }
    if (j != k) {
      residue = mult_by_inverse_transversal(p, *sys.slot(k, j));
      charge(k);
    } else {
      residue = p;  // sigma_{kk} is the identity, reduction is free
    }
    const MembershipTrace trace = sift(sys, residue);
    charge_sift(trace);
    return trace.member ? BResult::Member : BResult::Descend;
  }

  // ---- recursive strategy ----

  void rec_A(int k, const Perm& p) {
    sys.append_gen(k, p);
    // Live loop: filling a slot appends a column, and the new column must
    // also meet p. Fetch the list fresh each round, it can reallocate.
    for (std::size_t idx = 0; idx < sys.index_list(k).size(); ++idx) {
      const int j = sys.index_list(k)[idx];
      Perm prod;
      if (j == k) {
        prod = p;
      } else {
        prod = mult_transversal_by_perm(*sys.slot(k, j), p);
        charge(k);
      }
      count_product(k);
      rec_B(k, prod);
    }
  }

  void rec_B(int k, const Perm& p) {
    Perm residue;
    switch (b_steps(k, p, residue)) {
      case BResult::Filled:
        // Modified step B2: the freshly filled slot p must meet every
        // generator already in T(k).
        for (int l = 1; l <= sys.t(k); ++l) {
          Perm prod = compose(p, sys.gen(k, l));
          charge(k);
          count_product(k);
          rec_B(k, prod);
        }
        break;
      case BResult::Member:
        break;
      case BResult::Descend:
        rec_A(k - 1, residue);
        break;
    }
  }

  // ---- iterative strategy ----

  // One frame per level currently being brought up to date. The column
  // cursor i and the persistent counts c(k,i) carry all loop state, so a
  // descent is just a pushed frame and nothing recurses natively.
  void iter_A(int k, const Perm& p) {
    struct Frame {
      int level;
      int i;  // 1-based column cursor
    };
    sys.append_gen(k, p);
    std::vector<Frame> stack{{k, 1}};
    while (!stack.empty()) {
      Frame& frame = stack.back();
      const int level = frame.level;
      if (frame.i > sys.s(level)) {
        stack.pop_back();
        continue;
      }
      const int c = sys.count(level, frame.i);
      if (c >= sys.t(level)) {
        ++frame.i;
        continue;
      }
      const int l = c + 1;
      const int j = sys.index_list(level)[frame.i - 1];
      Perm prod;
      {
        const Perm& tau = sys.gen(level, l);
        if (j == level) {
          prod = tau;
        } else {
          prod = mult_transversal_by_perm(*sys.slot(level, j), tau);
          charge(level);
        }
      }
      sys.set_count(level, frame.i, l);
      count_product(level);
      Perm residue;
      if (b_steps(level, prod, residue) == BResult::Descend) {
        sys.append_gen(level - 1, residue);
        stack.push_back({level - 1, 1});  // invalidates frame; loop refetches
      }
    }
  }
};

}  // namespace

void insert_generator(TransversalSystem& sys, const Perm& p,
                      Strategy strategy, BuildStats& stats) {
  if (largest_moved_point(p) > sys.degree())
    throw std::invalid_argument("insert_generator: perm exceeds system degree");
  stats.strategy = strategy;
  stats.ensure_levels(sys.degree());
  Engine engine{sys, stats};
  ++stats.membership_tests;
  const MembershipTrace trace = sift(sys, p);
  engine.charge_sift(trace);
  if (trace.member) return;
  algorithm_A(sys, sys.degree(), p, strategy, stats);
}

void algorithm_A(TransversalSystem& sys, int k, const Perm& p,
                 Strategy strategy, BuildStats& stats) {
  if (k < 1 || k > sys.degree())
    throw std::invalid_argument("algorithm_A: level out of range");
  if (largest_moved_point(p) > k)
    throw std::invalid_argument("algorithm_A: perm moves points above level");
  assert(!sift(sys, p).member);
  stats.ensure_levels(sys.degree());
  Engine engine{sys, stats};
  if (strategy == Strategy::Recursive)
    engine.rec_A(k, p);
  else
    engine.iter_A(k, p);
}

void algorithm_B(TransversalSystem& sys, int k, const Perm& p,
                 Strategy strategy, BuildStats& stats) {
  if (k < 2)
    throw std::invalid_argument("algorithm_B: level must be at least 2");
  if (k > sys.degree() || largest_moved_point(p) > k)
    throw std::invalid_argument("algorithm_B: perm/level out of range");
  stats.ensure_levels(sys.degree());
  Engine engine{sys, stats};
  if (strategy == Strategy::Recursive) {
    engine.rec_B(k, p);
    return;
  }
  Perm residue;
  if (engine.b_steps(k, p, residue) == Engine::BResult::Descend)
    algorithm_A(sys, k - 1, residue, strategy, stats);
}

std::pair<TransversalSystem, BuildStats> build(const GeneratorSet& gens,
                                               Strategy strategy) {
  TransversalSystem sys = new_system(gens.degree);
  BuildStats stats;
  stats.strategy = strategy;
  stats.ensure_levels(gens.degree);
  for (const Perm& p : gens.perms) insert_generator(sys, p, strategy, stats);
  return {std::move(sys), std::move(stats)};
}

}  // namespace permrep
