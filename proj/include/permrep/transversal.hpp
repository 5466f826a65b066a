#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permrep/perm.hpp"

namespace permrep {

using BigInt = boost::multiprecision::cpp_int;

// Result of sifting a perm through the stored transversals. The perm is
// reduced level by level: at level k with current remainder taking k to j,
// either j = k (free), or slot (k,j) supplies a stored sigma and the
// remainder becomes remainder * sigma^-, or the slot is empty and the perm
// is not a member. cost_units charges k for every multiplication by a
// non-identity perm, which is the cost model used by all instrumentation
// in this library.
struct MembershipTrace {
  bool member = false;
  std::vector<std::pair<int, int>> path;  // (level, column) reductions used
  Perm residue;                           // identity iff member
  int failure_level = 0;                  // set iff !member
  int failure_column = 0;
  long long cost_units = 0;
};

struct LevelStat {
  int level = 0;
  int s = 0;  // transversal size including the implicit identity
  int t = 0;  // generator list length
};

// The per-level transversal tables Sigma(k) plus the generator lists T(k).
//
// Level k owns slots sigma_{kj} for 1 <= j < k; sigma_{kk} is the identity,
// held implicitly (it contributes 1 to s(k) and never costs a
// multiplication). Slots are stored as InverseRep at exactly their level.
// index_list(k) records the defined columns in creation order, starting
// with the implicit k itself; count(k,i) is the iterative strategy's
// bookkeeping of how many generator products have been examined for
// column i.
//
// Generator lists share storage: every distinct perm value appended to any
// T(k) lives once in a pool, and the lists reference pool slots, so a perm
// that cascades down several levels is not copied per level.
//
// Mutation happens only during construction (see sims.hpp); a completed
// system is read-only and safe to share across threads.
class TransversalSystem {
public:
  explicit TransversalSystem(int n);

  int degree() const { return n_; }

  bool slot_defined(int k, int j) const { return slots_[k][j].has_value(); }

  // The stored InverseRep, or nullptr for an empty slot. j = k (the
  // implicit identity) reads as empty; callers special-case it.
  const InverseRep* slot(int k, int j) const {
    const auto& cell = slots_[k][j];
    return cell ? &*cell : nullptr;
  }

  // Direct form of a stored slot, for output and tests.
  Perm slot_direct(int k, int j) const { return slots_[k][j]->direct(); }

  int s(int k) const { return static_cast<int>(index_lists_[k].size()); }
  int t(int k) const { return static_cast<int>(gens_[k].size()); }

  // Defined columns j(k,1..s(k)) in creation order; element 0 is k itself.
  const std::vector<int>& index_list(int k) const { return index_lists_[k]; }

  // tau(k,l), 1-based l.
  const Perm& gen(int k, int l) const { return pool_[gens_[k][l - 1]]; }

  int count(int k, int i) const { return counts_[k][i - 1]; }           // c(k,i), 1-based i
  void set_count(int k, int i, int c) { counts_[k][i - 1] = c; }

  // Store p as sigma_{kj}. Requires 1 <= j < k, an empty slot, and that p
  // lies in Pi(k) and takes k to j; appends the column with a zero count.
  void fill_slot(int k, int j, const Perm& p);

  // Append p to T(k), reusing pool storage if the value already exists.
  void append_gen(int k, const Perm& p);

  // All perms ever appended to any T(k), deduplicated, in first-append order.
  const std::vector<Perm>& gen_pool() const { return pool_; }

private:
  int n_;
  std::vector<std::vector<std::optional<InverseRep>>> slots_;  // [k][j], j < k
  std::vector<std::vector<int>> index_lists_;                  // [k] -> j(k,i)
  std::vector<std::vector<int>> counts_;                       // [k] -> c(k,i)
  std::vector<std::vector<std::size_t>> gens_;                 // [k] -> pool ids
  std::vector<Perm> pool_;
  std::unordered_map<std::string, std::size_t> pool_index_;    // packed images -> id
};

// Fresh system for the trivial group on 1..n: every slot empty, every T(k)
// empty, s(k) = 1. Throws std::invalid_argument for n < 1.
TransversalSystem new_system(int n);

// Membership test. Walks from the perm's largest moved point down to 1,
// never modifying the system. Throws std::invalid_argument if p moves a
// point beyond the system's degree.
MembershipTrace sift(const TransversalSystem& sys, const Perm& p);

// Group order: the product of s(k) over all levels (exact).
BigInt order(const TransversalSystem& sys);

// Union of all T(k), deduplicated, in first-insertion order.
std::vector<Perm> strong_generators(const TransversalSystem& sys);

// (k, s(k), t(k)) for every level 1..n.
std::vector<LevelStat> level_stats(const TransversalSystem& sys);

}  // namespace permrep
