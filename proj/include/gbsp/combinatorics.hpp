#ifndef GBSP_COMBINATORICS_HPP
#define GBSP_COMBINATORICS_HPP

#include "gbsp/rational.hpp"

#include <optional>
#include <vector>

namespace gbsp {

// Detector click pattern n = (n_1,...,n_M): one count per mode.
using ClickPattern = std::vector<int>;

// All permutations of one pattern, represented by its sorted form. `size` is
// the multinomial M!/(k_0! k_1! ...) over the multiplicity vector.
struct Orbit {
  ClickPattern representative;  // nondecreasing
  Int size;
};

// Meta-orbit: all patterns with the given total whose largest count equals
// max_count exactly.
struct MetaOrbitKey {
  int total = 0;
  int max_count = 0;
};

int pattern_total(const ClickPattern& p);
int pattern_max(const ClickPattern& p);
// Product of the entry factorials n_1! n_2! ... (the n! of probability
// denominators).
Int pattern_factorial(const ClickPattern& p);
// Multiplicities (k_0,...,k_max) of the entry values.
std::vector<int> multiplicity_vector(const ClickPattern& p);

Int orbit_size(const ClickPattern& p);

// Maps n to a binary pattern on n_max*M modes: block i is
// (0^{n_max-n_i}, 1^{n_i}). By default n_max is the largest count.
ClickPattern decollision(const ClickPattern& p, int n_max = -1);

// All orbits of length-M nondecreasing patterns with the given total and
// entries <= max_count. Ordered by attained maximum ascending; within one
// maximum value a, by the tuple (k_a, k_{a-1}, ..., k_2) ascending
// lexicographically (k_1 and k_0 are then forced).
std::vector<Orbit> enumerate_orbits(int modes, int total, int max_count);

// All distinct permutations of p, in lexicographic order.
std::vector<ClickPattern> orbit_members(const ClickPattern& p);

// prod_j binomial(n, j)^{k_j} over the multiplicity vector of p.
Int combinatorial_weight(const ClickPattern& p, int n);

// Checks sum over orbits of orbit_size * combinatorial_weight against
// binomial(n*M, 2r): the two ways of counting 2r-subsets of the decollided
// modes.
struct CountIdentity {
  bool ok = false;
  Int lhs;
  Int rhs;
};
CountIdentity verify_count_identity(int modes, int n, int r);

// Partition counting by exact truncated series expansion.
Int partition_count(int total);
// Partitions of `total` into at most `modes` parts, each at most
// `max_count` (the Gaussian binomial coefficient);
Int restricted_partition_count(int modes, int max_count, int total);
// Orbits whose maximum is exactly key.max_count.
Int meta_orbit_count(int modes, const MetaOrbitKey& key);

// Multiplicity vector (k_0,...,k_m) with sum_i k_i = modes and
// sum_i i*k_i = total that minimizes prod_i k_i! (equivalently maximizes the
// orbit size), subject to optional per-value caps (default: modes). Exact
// integer cost comparison; ties go to the lexicographically smallest vector.
struct KnapsackSolution {
  std::vector<int> multiplicities;  // k_0 ... k_m
  Int factorial_product;            // prod k_i!
  double log_cost = 0.0;            // sum log(k_i!)
};
KnapsackSolution max_orbit_knapsack(int modes, int total, int m,
                                    const std::vector<int>& caps = {});

}  // namespace gbsp

#endif  // GBSP_COMBINATORICS_HPP
