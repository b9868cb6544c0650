#ifndef GBSP_GBS_HPP
#define GBSP_GBS_HPP

#include "gbsp/budget.hpp"
#include "gbsp/graph.hpp"
#include "gbsp/matching.hpp"
#include "gbsp/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gbsp {

// GBS polynomial of a graph on M vertices, stored signless:
//   GBS+_G(x) = sum_r g(G,r) x^{M-2r},  g(G,r) = sum_{|S|=2r} haf^2(A_S).
// Monic of degree M; g(G,1) is the number of edges for unweighted graphs.
// The signed polynomial flips the x^{M-2r} term by (-1)^r.
struct GbsPolynomial {
  UniPoly signless;  // in x
  int order = 0;

  UniPoly signed_form() const { return alternate_signs(signless, order); }
};

enum class GbsKind { pure, mixed };

// Displaced GBS polynomial, pure or mixed, stored signless:
//   pure:  DGBS+_G(x,z)  = sum_s h(G,s;z) x^{M-s}, h = sum_{|S|=s} (mu+_{G[S]}(z))^2
//   mixed: mDGBS+_G(x,z) = sum_s q(G,s;z) x^{M-s}, q = sum_{|S|=s} mu+ of the
//          doubled submatrix [[A_S,B_S],[B_S^T,A_S]] (no squaring)
// At z=0 the pure kind reduces to GBS+.
struct DgbsPolynomial {
  BiPoly poly;  // in (x, z)
  int order = 0;
  GbsKind kind = GbsKind::pure;

  UniPoly at_z_zero() const { return poly.at_z_zero(); }
  // h(G,s;z) respectively q(G,s;z): the coefficient of x^{order-s}.
  UniPoly size_coefficient(int s) const { return poly.coeff_of_x(order - s); }
};

// Definition-side computation: one bottom-up hafnian sweep over all even
// subsets, then accumulate squares. Cost 2^M; refuses orders above the cap.
GbsPolynomial gbs_by_definition(const Graph& g, WorkBudget* budget = nullptr, int order_cap = 20);

// Duality-side computation: a single hafnian of prism(g) over the
// polynomial ring in x.
GbsPolynomial gbs_by_prism(const Graph& g, WorkBudget* budget = nullptr);

// g(G,r) alone, subset-by-subset: usable when the full polynomial is out of
// reach (large M, small r).
Rational gbs_coefficient(const Graph& g, int r, WorkBudget* budget = nullptr);

DgbsPolynomial dgbs_by_definition(const Graph& g, WorkBudget* budget = nullptr,
                                  int order_cap = 20);
DgbsPolynomial dgbs_by_duality(const Graph& g, WorkBudget* budget = nullptr);

// Mixed displaced GBS of the coupled pair (A, B). The assembled matrix
// [[A,B],[B^T,A]] must be symmetric, which holds for any square rational B;
// symmetry of B itself is not required.
DgbsPolynomial mdgbs_by_definition(const Graph& a, const RationalMatrix& b,
                                   WorkBudget* budget = nullptr, int order_cap = 16);
DgbsPolynomial mdgbs_by_definition(const Graph& a, const Graph& b, WorkBudget* budget = nullptr,
                                   int order_cap = 16);
DgbsPolynomial mdgbs_by_duality(const Graph& a, const RationalMatrix& b,
                                WorkBudget* budget = nullptr);
DgbsPolynomial mdgbs_by_duality(const Graph& a, const Graph& b, WorkBudget* budget = nullptr);

// Recovers all g(G,r) from evaluations (x_t, GBS+_G(x_t)) by solving the
// exact linear system; needs at least floor(M/2)+1 distinct nonzero nodes.
GbsPolynomial recover_gbs_from_evaluations(
    int order, const std::vector<std::pair<Rational, Rational>>& evals);

// Closed-form families, built as finite sums and products.
GbsPolynomial gbs_cycle_closed_form(int n);
GbsPolynomial gbs_complete_closed_form(int n);
GbsPolynomial gbs_complete_bipartite_closed_form(int m, int n);
GbsPolynomial gbs_book_closed_form(int pages);

// Dispatch on a family descriptor: "cycle N", "complete N",
// "complete_bipartite M N", "book N".
GbsPolynomial closed_form_oracle(const std::string& family);

// Signless matching polynomial of the cycle, m(C_n,r) = n/(n-r) * C(n-r,r);
// shared by the cycle closed form and the test suites.
UniPoly cycle_matching_signless(int n);

}  // namespace gbsp

#endif  // GBSP_GBS_HPP
