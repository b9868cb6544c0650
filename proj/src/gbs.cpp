#include "gbsp/gbs.hpp"

#include "gbsp/hafnian.hpp"
#include "gbsp/linear.hpp"

#include <bit>
#include <cstdint>
#include <sstream>

namespace gbsp {

GbsPolynomial gbs_by_definition(const Graph& g, WorkBudget* budget, int order_cap) {
  int n = g.order();
  if (n > order_cap)
    throw SizeError("full GBS polynomial capped at " + std::to_string(order_cap) +
                    " vertices, got " + std::to_string(n));
  std::vector<Rational> table = hafnian_all_even_subsets(g.weights(), budget);
  UniPoly p;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    const Rational& h = table[mask];
    if (sgn(h) == 0) continue;
    int d = n - std::popcount(mask);
    p.set_coeff(d, p.coeff(d) + h * h);
  }
  return {p, n};
}

GbsPolynomial gbs_by_prism(const Graph& g, WorkBudget* budget) {
  PolyGraph pr = prism(g);
  return {hafnian_memoized(pr.weights(), budget), g.order()};
}

Rational gbs_coefficient(const Graph& g, int r, WorkBudget* budget) {
  int n = g.order();
  if (r < 0 || 2 * r > n) throw std::invalid_argument("need 0 <= 2r <= order");
  if (r == 0) return 1;
  std::optional<WorkBudget> own;
  if (!budget) {
    own.emplace(WorkBudget::from_env());
    budget = &*own;
  }
  std::vector<int> subset(2 * r);
  for (int i = 0; i < 2 * r; ++i) subset[i] = i;
  Rational total = 0;
  do {
    budget->tick();
    Rational h = hafnian_on_subset(g.weights(), subset);
    if (sgn(h) != 0) total += h * h;
  } while (next_combination(subset, n));
  return total;
}

DgbsPolynomial dgbs_by_definition(const Graph& g, WorkBudget* budget, int order_cap) {
  int n = g.order();
  if (n > order_cap)
    throw SizeError("full displaced GBS polynomial capped at " + std::to_string(order_cap) +
                    " vertices, got " + std::to_string(n));
  MatchingEngine<Rational> engine(g.weights(), budget);
  std::vector<UniPoly> by_size(n + 1);  // h(G,s;z), indexed by s
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    UniPoly mu = unipoly_from_coeffs(engine.signless_on_mask(mask));
    by_size[std::popcount(mask)] += mu * mu;
  }
  BiPoly acc;
  for (int s = 0; s <= n; ++s) acc += BiPoly::from_z_poly(by_size[s], n - s);
  return {acc, n, GbsKind::pure};
}

DgbsPolynomial dgbs_by_duality(const Graph& g, WorkBudget* budget) {
  return {matching_signless(prism(g), budget), g.order(), GbsKind::pure};
}

DgbsPolynomial mdgbs_by_definition(const Graph& a, const RationalMatrix& b, WorkBudget* budget,
                                   int order_cap) {
  int n = a.order();
  if (b.rows() != n || b.cols() != n)
    throw std::invalid_argument("coupling block must be square of the same order");
  if (n > order_cap)
    throw SizeError("full mixed displaced GBS polynomial capped at " + std::to_string(order_cap) +
                    " vertices, got " + std::to_string(n));
  RationalMatrix c0 = RationalMatrix::Zero(2 * n, 2 * n);
  c0.block(0, 0, n, n) = a.weights();
  c0.block(n, n, n, n) = a.weights();
  c0.block(0, n, n, n) = b;
  c0.block(n, 0, n, n) = b.transpose();
  MatchingEngine<Rational> engine(c0, budget);
  std::vector<UniPoly> by_size(n + 1);  // q(G,s;z), indexed by s
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    std::uint64_t doubled = mask | (mask << n);
    by_size[std::popcount(mask)] += unipoly_from_coeffs(engine.signless_on_mask(doubled));
  }
  BiPoly acc;
  for (int s = 0; s <= n; ++s) acc += BiPoly::from_z_poly(by_size[s], n - s);
  return {acc, n, GbsKind::mixed};
}

DgbsPolynomial mdgbs_by_definition(const Graph& a, const Graph& b, WorkBudget* budget,
                                   int order_cap) {
  return mdgbs_by_definition(a, b.weights(), budget, order_cap);
}

DgbsPolynomial mdgbs_by_duality(const Graph& a, const RationalMatrix& b, WorkBudget* budget) {
  return {matching_signless(loss_extension(a, b), budget), a.order(), GbsKind::mixed};
}

DgbsPolynomial mdgbs_by_duality(const Graph& a, const Graph& b, WorkBudget* budget) {
  return mdgbs_by_duality(a, b.weights(), budget);
}

GbsPolynomial recover_gbs_from_evaluations(
    int order, const std::vector<std::pair<Rational, Rational>>& evals) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  int unknowns = order / 2 + 1;  // g(G,0) .. g(G, floor(M/2))
  int k = static_cast<int>(evals.size());
  if (k < unknowns)
    throw std::invalid_argument("need at least " + std::to_string(unknowns) +
                                " evaluation nodes, got " + std::to_string(k));
  for (int s = 0; s < k; ++s) {
    if (sgn(evals[s].first) == 0) throw std::invalid_argument("evaluation nodes must be nonzero");
    for (int t = s + 1; t < k; ++t)
      if (evals[s].first == evals[t].first)
        throw std::invalid_argument("repeated evaluation node " + to_string(evals[s].first));
  }
  RationalMatrix aug = RationalMatrix::Zero(k, unknowns + 1);
  for (int t = 0; t < k; ++t) {
    for (int r = 0; r < unknowns; ++r)
      aug(t, r) = pow_rational(evals[t].first, order - 2 * r);
    aug(t, unknowns) = evals[t].second;
  }
  int rank = row_reduce(aug, unknowns);
  for (int t = rank; t < k; ++t)
    if (sgn(aug(t, unknowns)) != 0)
      throw std::invalid_argument("inconsistent evaluation data");
  if (rank < unknowns)
    throw std::invalid_argument("evaluations do not determine the polynomial");
  UniPoly p;
  for (int t = 0; t < rank; ++t) {
    int col = 0;
    while (col < unknowns && sgn(aug(t, col)) == 0) ++col;
    p.set_coeff(order - 2 * col, aug(t, unknowns));
  }
  return {p, order};
}

UniPoly cycle_matching_signless(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  UniPoly p;
  for (int r = 0; 2 * r <= n; ++r)
    p.set_coeff(n - 2 * r, Rational(n) / Rational(n - r) * Rational(binomial(n - r, r)));
  return p;
}

GbsPolynomial gbs_cycle_closed_form(int n) {
  UniPoly signed_form = alternate_signs(cycle_matching_signless(n), n);
  if (n % 2 == 0) {
    int sign = (n / 2) % 2 == 0 ? 1 : -1;
    signed_form += UniPoly(2 * sign);
  }
  return {alternate_signs(signed_form, n), n};
}

GbsPolynomial gbs_complete_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  UniPoly p;
  for (int k = 0; 2 * k <= n; ++k) {
    Int odd = double_factorial_below(2 * k);  // (2k-1)!!, the perfect matchings of K_{2k}
    p.set_coeff(n - 2 * k, Rational(binomial(n, 2 * k)) * Rational(odd * odd));
  }
  return {p, n};
}

GbsPolynomial gbs_complete_bipartite_closed_form(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("both sides need at least one vertex");
  UniPoly p;
  for (int r = 0; r <= std::min(m, n); ++r) {
    Int f = factorial(r);
    p.set_coeff(m + n - 2 * r, Rational(binomial(m, r) * binomial(n, r) * f * f));
  }
  return {p, m + n};
}

GbsPolynomial gbs_book_closed_form(int pages) {
  if (pages < 1) throw std::invalid_argument("book needs at least one page");
  UniPoly x2 = UniPoly::monomial(2, 1);
  UniPoly page = x2 - UniPoly(1);              // x^2 - 1
  UniPoly spine = x2 - UniPoly(pages + 1);     // x^2 - n - 1
  UniPoly signed_form = spine * spine;
  for (int i = 1; i < pages; ++i) signed_form *= page;
  int order = 2 * pages + 2;
  return {alternate_signs(signed_form, order), order};
}

GbsPolynomial closed_form_oracle(const std::string& family) {
  std::istringstream in(family);
  std::string name;
  if (!(in >> name)) throw std::invalid_argument("empty family descriptor");
  auto read_int = [&](const char* what) {
    int v;
    if (!(in >> v)) throw std::invalid_argument(std::string("family needs ") + what);
    return v;
  };
  GbsPolynomial out;
  if (name == "cycle") {
    out = gbs_cycle_closed_form(read_int("a vertex count"));
  } else if (name == "complete") {
    out = gbs_complete_closed_form(read_int("a vertex count"));
  } else if (name == "complete_bipartite") {
    int m = read_int("two side sizes");
    out = gbs_complete_bipartite_closed_form(m, read_int("two side sizes"));
  } else if (name == "book") {
    out = gbs_book_closed_form(read_int("a page count"));
  } else {
    throw std::invalid_argument("unknown family '" + name +
                                "' (expected cycle, complete, complete_bipartite or book)");
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing tokens in family descriptor");
  return out;
}

}  // namespace gbsp
