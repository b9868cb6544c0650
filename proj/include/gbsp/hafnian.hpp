#ifndef GBSP_HAFNIAN_HPP
#define GBSP_HAFNIAN_HPP

#include "gbsp/budget.hpp"
#include "gbsp/polynomial.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace gbsp {

template <class Ring>
using DenseMatrix = Eigen::Matrix<Ring, Eigen::Dynamic, Eigen::Dynamic>;

// Largest order accepted by the subset-walk algorithms. Polynomial entries
// get a tighter cap: each memo node then holds a polynomial, not a scalar.
template <class Ring>
inline constexpr int subset_order_cap = 26;
template <>
inline constexpr int subset_order_cap<UniPoly> = 22;

namespace detail {

template <class Ring>
void require_square_symmetric(const DenseMatrix<Ring>& w) {
  if (w.rows() != w.cols()) throw std::invalid_argument("matrix must be square");
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = i + 1; j < w.cols(); ++j)
      if (!(w(i, j) == w(j, i))) throw std::invalid_argument("matrix must be symmetric");
}

}  // namespace detail

// The hafnian: one term per perfect matching of the index set, each term the
// product of the matched entries. Diagonal entries are never read. Empty
// matrix -> 1; odd order -> 0.

// Plain recursion, no memoization: match the lowest live index against each
// live partner. ~(k-1)!! leaf terms; the right tool for many small
// (sub)matrices.
template <class Ring>
Ring hafnian_on_subset(const DenseMatrix<Ring>& w, const std::vector<int>& live) {
  std::size_t k = live.size();
  if (k == 0) return Ring(1);
  if (k % 2 != 0) return Ring(0);
  if (k == 2) return w(live[0], live[1]);
  int v = live[0];
  std::vector<int> rest(live.begin() + 1, live.end());
  Ring acc(0);
  for (std::size_t j = 0; j < rest.size(); ++j) {
    int u = rest[j];
    if (ring_is_zero(w(v, u))) continue;
    std::vector<int> sub;
    sub.reserve(rest.size() - 1);
    for (std::size_t t = 0; t < rest.size(); ++t)
      if (t != j) sub.push_back(rest[t]);
    Ring s = hafnian_on_subset(w, sub);
    if (!ring_is_zero(s)) acc += w(v, u) * s;
  }
  return acc;
}

template <class Ring>
Ring hafnian_plain(const DenseMatrix<Ring>& w) {
  detail::require_square_symmetric(w);
  std::vector<int> live(w.rows());
  for (int i = 0; i < static_cast<int>(live.size()); ++i) live[i] = i;
  return hafnian_on_subset(w, live);
}

namespace detail {

template <class Ring>
class HafnianMemo {
 public:
  HafnianMemo(const DenseMatrix<Ring>& w, WorkBudget& budget) : w_(w), budget_(budget) {}

  Ring at(std::uint64_t mask) {
    int k = std::popcount(mask);
    if (k == 0) return Ring(1);
    if (k % 2 != 0) return Ring(0);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    budget_.tick();
    int v = std::countr_zero(mask);
    std::uint64_t rest = mask & (mask - 1);
    Ring acc(0);
    for (std::uint64_t bits = rest; bits;) {
      int u = std::countr_zero(bits);
      bits &= bits - 1;
      if (ring_is_zero(w_(v, u))) continue;
      Ring s = at(rest & ~(std::uint64_t(1) << u));
      if (!ring_is_zero(s)) acc += w_(v, u) * s;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

 private:
  const DenseMatrix<Ring>& w_;
  WorkBudget& budget_;
  std::unordered_map<std::uint64_t, Ring> memo_;
};

}  // namespace detail

// Subset-memoized recursion haf(A_S) = sum_j a_{s0,j} haf(A_{S \ {s0,j}})
// over the lowest index s0 of S, keyed by the subset bitmask. O(k 2^k) ring
// operations worst case; the right tool for one large matrix.
template <class Ring>
Ring hafnian_memoized(const DenseMatrix<Ring>& w, WorkBudget* budget = nullptr) {
  detail::require_square_symmetric(w);
  int k = static_cast<int>(w.rows());
  if (k > subset_order_cap<Ring>)
    throw SizeError("hafnian order " + std::to_string(k) + " exceeds the cap of " +
                    std::to_string(subset_order_cap<Ring>));
  WorkBudget local = WorkBudget::from_env();
  if (!budget) budget = &local;
  detail::HafnianMemo<Ring> memo(w, *budget);
  std::uint64_t full = k == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << k) - 1;
  return memo.at(full);
}

// Strategy dispatch: plain recursion for small matrices, subset-memoized
// beyond that.
template <class Ring>
Ring hafnian(const DenseMatrix<Ring>& w, WorkBudget* budget = nullptr) {
  if (w.rows() != w.cols()) throw std::invalid_argument("matrix must be square");
  if (w.rows() <= 12) return hafnian_plain(w);
  return hafnian_memoized(w, budget);
}

// haf(A_S) for every even-cardinality subset S at once, bottom-up over
// bitmasks (odd-cardinality slots hold ring zero). Feeds whole-polynomial
// assembly: coefficients over all S are popcount-class sums over this table.
template <class Ring>
std::vector<Ring> hafnian_all_even_subsets(const DenseMatrix<Ring>& w, WorkBudget* budget = nullptr) {
  detail::require_square_symmetric(w);
  int k = static_cast<int>(w.rows());
  if (k > 24)
    throw SizeError("subset table order " + std::to_string(k) + " exceeds the cap of 24");
  WorkBudget local = WorkBudget::from_env();
  if (!budget) budget = &local;
  std::vector<Ring> table(std::size_t(1) << k, Ring(0));
  table[0] = Ring(1);
  for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    budget->tick();
    int v = std::countr_zero(mask);
    std::uint64_t rest = mask & (mask - 1);
    Ring acc(0);
    for (std::uint64_t bits = rest; bits;) {
      int u = std::countr_zero(bits);
      bits &= bits - 1;
      if (ring_is_zero(w(v, u))) continue;
      const Ring& s = table[rest & ~(std::uint64_t(1) << u)];
      if (!ring_is_zero(s)) acc += w(v, u) * s;
    }
    table[mask] = acc;
  }
  return table;
}

// Lexicographic fixed-size subset enumeration: `c` holds k strictly
// increasing indices below n; returns false after the last combination.
inline bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace gbsp

#endif  // GBSP_HAFNIAN_HPP
