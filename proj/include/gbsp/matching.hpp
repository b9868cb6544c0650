#ifndef GBSP_MATCHING_HPP
#define GBSP_MATCHING_HPP

#include "gbsp/budget.hpp"
#include "gbsp/graph.hpp"
#include "gbsp/hafnian.hpp"
#include "gbsp/polynomial.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gbsp {

// Signless matching polynomial mu+ of a weighted graph: coefficient of
// z^{M-2r} is the weighted r-match count (weights enter linearly, never
// squared). Exponents share the parity of `order` and the top coefficient
// is 1.
struct MatchingPolynomial {
  UniPoly signless;  // in z
  int order = 0;
};

// Computes mu+ restricted to arbitrary vertex subsets of one fixed weight
// matrix, sharing a single memo table across all queries. Entries live in
// any commutative ring (Rational, UniPoly for duality computations, double
// for probability evaluations).
//
// Recurrence on the lowest live vertex v:
//   mu+(G) = z * mu+(G - v) + sum_u a(v,u) * mu+(G - v - u)
// The memo is keyed by the content of the live submatrix (value ids of the
// off-diagonal upper triangle), so vertices with identical rows collapse
// to one state regardless of which of them a subset retains. Matchings
// never read the diagonal. Results are coefficient vectors indexed by
// z-degree.
template <class Ring>
class MatchingEngine {
 public:
  explicit MatchingEngine(DenseMatrix<Ring> w, WorkBudget* budget = nullptr)
      : weights_(std::move(w)), budget_(budget) {
    detail::require_square_symmetric(weights_);
    order_ = static_cast<int>(weights_.rows());
    if (order_ > 32)
      throw SizeError("matching recurrence handles at most 32 vertices, got " +
                      std::to_string(order_));
    if (!budget_) {
      own_.emplace(WorkBudget::from_env());
      budget_ = &*own_;
    }
    ids_.assign(static_cast<std::size_t>(order_) * order_, 0);
    neighbors_.assign(order_, 0);
    std::vector<std::pair<int, int>> reps;
    for (int i = 0; i < order_; ++i)
      for (int j = i + 1; j < order_; ++j) {
        std::uint16_t id = 0;
        if (!ring_is_zero(weights_(i, j))) {
          for (std::size_t k = 0; k < reps.size(); ++k)
            if (weights_(reps[k].first, reps[k].second) == weights_(i, j)) {
              id = static_cast<std::uint16_t>(k + 1);
              break;
            }
          if (id == 0) {
            reps.push_back({i, j});
            id = static_cast<std::uint16_t>(reps.size());
          }
          neighbors_[i] |= std::uint64_t(1) << j;
          neighbors_[j] |= std::uint64_t(1) << i;
        }
        ids_[static_cast<std::size_t>(i) * order_ + j] = id;
        ids_[static_cast<std::size_t>(j) * order_ + i] = id;
      }
  }

  int order() const { return order_; }
  const DenseMatrix<Ring>& weights() const { return weights_; }
  std::uint64_t full_mask() const {
    return order_ == 0 ? 0 : (std::uint64_t(~0) >> (64 - order_));
  }

  // Coefficients of mu+ of the subgraph induced by the set bits of `mask`,
  // indexed by z-degree.
  std::vector<Ring> signless_on_mask(std::uint64_t mask) {
    if (mask & ~full_mask()) throw std::invalid_argument("subset mask exceeds graph order");
    return compute(mask);
  }

  std::vector<Ring> signless_all() { return compute(full_mask()); }

 private:
  DenseMatrix<Ring> weights_;
  int order_ = 0;
  WorkBudget* budget_;
  std::optional<WorkBudget> own_;
  std::vector<std::uint16_t> ids_;
  std::vector<std::uint64_t> neighbors_;
  std::unordered_map<std::string, std::vector<Ring>> memo_;

  static std::vector<Ring> shift_z(const std::vector<Ring>& p, int k) {
    if (k == 0) return p;
    std::vector<Ring> r(p.size() + k, Ring(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i + k] = p[i];
    return r;
  }

  std::string content_key(std::uint64_t mask) const {
    std::vector<int> live;
    live.reserve(std::popcount(mask));
    for (std::uint64_t t = mask; t; t &= t - 1) live.push_back(std::countr_zero(t));
    std::string key;
    key.reserve(1 + live.size() * (live.size() - 1));
    key.push_back(static_cast<char>(live.size()));
    for (std::size_t a = 0; a < live.size(); ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b) {
        std::uint16_t id = ids_[static_cast<std::size_t>(live[a]) * order_ + live[b]];
        key.push_back(static_cast<char>(id & 255));
        key.push_back(static_cast<char>(id >> 8));
      }
    return key;
  }

  std::vector<Ring> compute(std::uint64_t mask) {
    // An isolated live vertex only ever contributes a factor z; stripping
    // them all first keeps the memo free of padding states. Isolation is
    // mutual, so one pass against the original mask suffices.
    int shift = 0;
    std::uint64_t m = mask;
    for (std::uint64_t t = mask; t; t &= t - 1) {
      int v = std::countr_zero(t);
      if ((neighbors_[v] & mask) == 0) {
        m &= ~(std::uint64_t(1) << v);
        ++shift;
      }
    }
    if (m == 0) {
      std::vector<Ring> r(shift + 1, Ring(0));
      r[shift] = Ring(1);
      return r;
    }
    std::string key = content_key(m);
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      budget_->tick();
      int v = std::countr_zero(m);
      std::uint64_t rest = m & ~(std::uint64_t(1) << v);
      std::vector<Ring> acc = shift_z(compute(rest), 1);
      for (std::uint64_t nb = neighbors_[v] & rest; nb; nb &= nb - 1) {
        int u = std::countr_zero(nb);
        std::vector<Ring> sub = compute(rest & ~(std::uint64_t(1) << u));
        if (acc.size() < sub.size()) acc.resize(sub.size(), Ring(0));
        for (std::size_t d = 0; d < sub.size(); ++d) acc[d] += weights_(v, u) * sub[d];
      }
      it = memo_.emplace(std::move(key), std::move(acc)).first;
    }
    return shift_z(it->second, shift);
  }
};

inline UniPoly unipoly_from_coeffs(const std::vector<Rational>& c) {
  UniPoly p;
  for (std::size_t d = 0; d < c.size(); ++d) p.set_coeff(static_cast<int>(d), c[d]);
  return p;
}

// z-degree-indexed UniPoly coefficients (each a polynomial in x) -> BiPoly.
inline BiPoly bipoly_from_z_coeffs(const std::vector<UniPoly>& c) {
  BiPoly r;
  for (std::size_t dz = 0; dz < c.size(); ++dz)
    for (int dx = 0; dx <= c[dz].degree(); ++dx)
      r += BiPoly::monomial(dx, static_cast<int>(dz), c[dz].coeff(dx));
  return r;
}

inline MatchingPolynomial matching_signless(const Graph& g, WorkBudget* budget = nullptr) {
  MatchingEngine<Rational> engine(g.weights(), budget);
  return {unipoly_from_coeffs(engine.signless_all()), g.order()};
}

// mu+ of a graph whose edge weights are polynomials in x (prisms, loss
// extensions); the result collects z-degree coefficients into a BiPoly.
inline BiPoly matching_signless(const PolyGraph& g, WorkBudget* budget = nullptr) {
  MatchingEngine<UniPoly> engine(g.weights(), budget);
  std::vector<UniPoly> c = engine.signless_all();
  return bipoly_from_z_coeffs(c);
}

inline UniPoly matching_signed(const Graph& g, WorkBudget* budget = nullptr) {
  return alternate_signs(matching_signless(g, budget).signless, g.order());
}

// Independent cross-check: mu+(z) = sum over even subsets S of
// haf(A_S) z^{M-|S|}, each hafnian computed directly.
inline MatchingPolynomial matching_signless_oracle(const Graph& g, WorkBudget* budget = nullptr) {
  int n = g.order();
  if (n > 16)
    throw SizeError("subset-hafnian matching oracle handles at most 16 vertices, got " +
                    std::to_string(n));
  std::vector<Rational> table = hafnian_all_even_subsets(g.weights(), budget);
  UniPoly p;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    int pc = std::popcount(mask);
    if (pc % 2 != 0 || sgn(table[mask]) == 0) continue;
    p.set_coeff(n - pc, p.coeff(n - pc) + table[mask]);
  }
  return {p, n};
}

inline Rational match_count(const Graph& g, int r, WorkBudget* budget = nullptr) {
  if (r < 0 || 2 * r > g.order())
    throw std::invalid_argument("match count needs 0 <= 2r <= order");
  return matching_signless(g, budget).signless.coeff(g.order() - 2 * r);
}

}  // namespace gbsp

#endif  // GBSP_MATCHING_HPP
