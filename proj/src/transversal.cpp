#include "permrep/transversal.hpp"

#include <cassert>
#include <stdexcept>

namespace permrep {

namespace {

// Pool key: the image array with trailing fixed points trimmed, packed as
// bytes so equal mappings declared at different degrees collide as they
// should.
std::string pool_key(const Perm& p) {
  const int n = largest_moved_point(p);
  std::string key;
  key.reserve(static_cast<std::size_t>(n) * sizeof(int));
  for (int i = 1; i <= n; ++i) {
    const int v = p.apply(i);
    key.append(reinterpret_cast<const char*>(&v), sizeof(int));
  }
  return key;
}

}  // namespace

TransversalSystem::TransversalSystem(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("TransversalSystem: degree must be >= 1");
  slots_.resize(n + 1);
  index_lists_.resize(n + 1);
  counts_.resize(n + 1);
  gens_.resize(n + 1);
  for (int k = 1; k <= n; ++k) {
    slots_[k].resize(k);  // columns 1..k-1 used; 0 unused
    index_lists_[k] = {k};
    counts_[k] = {0};
  }
}

void TransversalSystem::fill_slot(int k, int j, const Perm& p) {
  assert(k >= 2 && k <= n_ && j >= 1 && j < k);
  assert(!slots_[k][j].has_value());
  assert(largest_moved_point(p) <= k && p.apply(k) == j);
  slots_[k][j].emplace(p, k);
  index_lists_[k].push_back(j);
  counts_[k].push_back(0);
}

void TransversalSystem::append_gen(int k, const Perm& p) {
  assert(k >= 1 && k <= n_ && largest_moved_point(p) <= k);
  auto [it, inserted] = pool_index_.try_emplace(pool_key(p), pool_.size());
  if (inserted) pool_.push_back(p);
  gens_[k].push_back(it->second);
}

TransversalSystem new_system(int n) { return TransversalSystem(n); }

MembershipTrace sift(const TransversalSystem& sys, const Perm& p) {
  if (largest_moved_point(p) > sys.degree())
    throw std::invalid_argument("sift: perm exceeds system degree");
  MembershipTrace trace;
  trace.residue = p;
  for (int k = largest_moved_point(trace.residue); k >= 1;
       k = largest_moved_point(trace.residue)) {
    const int j = trace.residue.apply(k);
    // j == k cannot happen here: k is the largest moved point.
    const InverseRep* slot = sys.slot(k, j);
    if (!slot) {
      trace.failure_level = k;
      trace.failure_column = j;
      return trace;
    }
    trace.residue = mult_by_inverse_transversal(trace.residue, *slot);
    trace.path.emplace_back(k, j);
    trace.cost_units += k;
  }
  trace.member = true;
  return trace;
}

BigInt order(const TransversalSystem& sys) {
  BigInt g = 1;
  for (int k = 1; k <= sys.degree(); ++k) g *= sys.s(k);
  return g;
}

std::vector<Perm> strong_generators(const TransversalSystem& sys) {
  return sys.gen_pool();
}

std::vector<LevelStat> level_stats(const TransversalSystem& sys) {
  std::vector<LevelStat> stats;
  stats.reserve(sys.degree());
  for (int k = 1; k <= sys.degree(); ++k)
    stats.push_back({k, sys.s(k), sys.t(k)});
  return stats;
}

}  // namespace permrep
