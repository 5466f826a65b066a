#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permrep/perm.hpp"

namespace permrep {

// An ordered generator list with a declared ambient degree. The order
// matters: systems are built by inserting the perms in list order, and the
// build statistics depend on that order (the group itself does not).
struct GeneratorSet {
  int degree = 0;
  std::vector<Perm> perms;
  std::string label;  // family name + parameters (+ seed), e.g. "two-gen:n=16"
};

enum class StaircaseKind { AdjacentTransposition, DescendingCycle, Random };

// Single perm of degree n = 2^h - 2 whose cycle lengths are
// 2^(h-1), 2^(h-2), ..., 2. Cycle i (longest first) takes the next
// 2^(h-i) - 1 unused points in increasing order starting from 1 and is
// closed by one of the h-1 top points n-h+2..n:
//
//   relabeled = false: the longest cycle closes with n, the next with n-1,
//     and so on down to n-h+2. Building from this perm fills 2^(h-1) - 1
//     slots, all at level n.
//   relabeled = true: the closing points are assigned in the opposite
//     order, so the longest cycle closes with n-h+2 and the shortest with
//     n. Building from this perm fills only h-1 slots, one per cascade
//     level, because each residue is the square of the previous one.
//
// h = 4 gives degree 14 and, respectively,
//   [1,2,3,4,5,6,7,14][8,9,10,13][11,12]  and
//   [1,2,3,4,5,6,7,12][8,9,10,13][11,14].
GeneratorSet doubling_cycle_perm(int h, bool relabeled);

// The staircase generators pi_2, ..., pi_n in increasing order of k, where
// pi_k fixes every point above k and takes k to k-1:
//
//   AdjacentTransposition: pi_k = [k-1,k]
//   DescendingCycle:       pi_k = the k-cycle taking k,k-1,...,1 in a ring
//                          (k to k-1, k-1 to k-2, ..., 1 back to k)
//   Random:                pi_k maps {1..k-1} onto {1..k} minus {k-1} by a
//                          uniform bijection; all (k-1)! such perms are
//                          equally likely. Sampling is seeded and stable
//                          across platforms (see detail in the .cpp).
GeneratorSet staircase_family(int n, StaircaseKind kind, std::uint64_t seed = 0);

// The pair (sigma_n, tau_n) with sigma_n the full cycle [1,2,...,n] and
// tau_n the transposition [n-1,n].
GeneratorSet two_generator_family(int n);

// For even n, the n/2 involutions whose i-th member is the product of the
// last i adjacent pairs: [n-1,n], [n-3,n-2][n-1,n], ...,
// [1,2][3,4]...[n-1,n]. The group they generate has order 2^(n/2).
GeneratorSet transposition_products_family(int n);

// The degree-7 pair a = (images 2,4,6,5,7,1,3) and b = [2,4][3,5], the
// classical small worked example for this data structure.
GeneratorSet sims_example();

// Breadth-first closure of {identity} + gens under composition. Returns
// every group element (each exactly once, identity included). Throws
// std::length_error when the closure exceeds cap; meant for desk-scale
// degrees only.
std::vector<Perm> brute_force_closure(const GeneratorSet& gens,
                                      std::size_t cap = 50000);

// Parse a CLI-style family spec into a concrete generator set. Accepted
// forms: "doubling:h=4", "doubling-relabeled:h=4", "stairs-adjacent:n=16",
// "stairs-cycle:n=16", "stairs-random:n=16,seed=1" (seed defaults to 0),
// "two-gen:n=16", "transposition-products:n=16", "sims-example".
// Throws std::invalid_argument for unknown names or bad parameters.
GeneratorSet family_from_spec(const std::string& spec);

// Instantiate a sized family by bare name ("doubling", "doubling-relabeled",
// "stairs-adjacent", "stairs-cycle", "stairs-random", "two-gen",
// "transposition-products") at size n. Only stairs-random consumes the
// seed. For the doubling families n must equal 2^h - 2 for some h >= 2.
GeneratorSet family_instance(const std::string& name, int n,
                             std::uint64_t seed = 0);

}  // namespace permrep
