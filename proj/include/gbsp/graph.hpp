#ifndef GBSP_GRAPH_HPP
#define GBSP_GRAPH_HPP

#include "gbsp/hafnian.hpp"
#include "gbsp/polynomial.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace gbsp {

using PolyMatrix = DenseMatrix<UniPoly>;
using VertexSubset = std::vector<int>;  // strictly increasing, 0-based

// Weighted graph as its symmetric rational weight matrix. Loops live on the
// diagonal; matchings and hafnians never read the diagonal, so loops only
// matter where a construction copies them into off-diagonal positions
// (tensoring) or where the statistics layer encodes them.
class Graph {
 public:
  explicit Graph(RationalMatrix w) : w_(std::move(w)) {
    detail::require_square_symmetric(w_);
  }

  static Graph empty(int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    return Graph(RationalMatrix::Zero(order, order));
  }

  int order() const { return static_cast<int>(w_.rows()); }
  const RationalMatrix& weights() const { return w_; }
  const Rational& weight(int i, int j) const { return w_(i, j); }

  bool has_loops() const {
    for (int i = 0; i < order(); ++i)
      if (sgn(w_(i, i)) != 0) return true;
    return false;
  }

  // 0/1 weights, loop-free: the class graph6 can carry.
  bool is_simple_unweighted() const {
    for (int i = 0; i < order(); ++i)
      for (int j = 0; j < order(); ++j) {
        if (i == j && sgn(w_(i, j)) != 0) return false;
        if (i != j && w_(i, j) != 0 && w_(i, j) != 1) return false;
      }
    return true;
  }

  bool operator==(const Graph& o) const {
    if (order() != o.order()) return false;
    for (int i = 0; i < order(); ++i)
      for (int j = 0; j < order(); ++j)
        if (!(w_(i, j) == o.w_(i, j))) return false;
    return true;
  }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  RationalMatrix w_;
};

// Graph whose weights are univariate polynomials in x (prisms, loss
// extensions). Evaluating x yields an ordinary Graph.
class PolyGraph {
 public:
  explicit PolyGraph(PolyMatrix w) : w_(std::move(w)) {
    detail::require_square_symmetric(w_);
  }

  int order() const { return static_cast<int>(w_.rows()); }
  const PolyMatrix& weights() const { return w_; }

  Graph evaluate(const Rational& x) const {
    RationalMatrix m(order(), order());
    for (int i = 0; i < order(); ++i)
      for (int j = 0; j < order(); ++j) m(i, j) = w_(i, j).evaluate(x);
    return Graph(std::move(m));
  }

 private:
  PolyMatrix w_;
};

// --- constructions ---

// 0-based endpoints; weight defaults handled by the caller. Duplicate edges
// and out-of-range endpoints are rejected; i == j writes a loop.
Graph from_edge_list(int order, const std::vector<std::tuple<int, int, Rational>>& edges);

Graph disjoint_union(const Graph& a, const Graph& b);

// A tensor J_n with J carrying a unit diagonal, so each vertex becomes n
// interchangeable copies; copy a of vertex i sits at index i*n + a.
Graph tensor_with_loops_complete(const Graph& g, int n);

// Vertex i replaced by pattern[i] copies (entries >= 0); entry
// ((i,a),(j,b)) = w(i,j) for all copy indices, diagonal blocks included, so
// a loop on i becomes a complete block among i's copies.
template <class Ring>
DenseMatrix<Ring> reduced_kronecker_matrix(const DenseMatrix<Ring>& w, const std::vector<int>& pattern) {
  if (static_cast<int>(pattern.size()) != w.rows())
    throw std::invalid_argument("pattern length must equal the order");
  int total = 0;
  for (int c : pattern) {
    if (c < 0) throw std::invalid_argument("pattern entries must be nonnegative");
    total += c;
  }
  DenseMatrix<Ring> r(total, total);
  int row = 0;
  for (int i = 0; i < static_cast<int>(pattern.size()); ++i)
    for (int a = 0; a < pattern[i]; ++a, ++row) {
      int col = 0;
      for (int j = 0; j < static_cast<int>(pattern.size()); ++j)
        for (int b = 0; b < pattern[j]; ++b, ++col) r(row, col) = w(i, j);
    }
  return r;
}

Graph reduced_kronecker(const Graph& g, const std::vector<int>& pattern);

// [[A, xI], [xI, A]]: two copies of g joined by rungs of weight x.
PolyGraph prism(const Graph& g);

// [[A, B + xI], [B^T + xI, A]]. b may be any square rational matrix of
// matching order; the assembled matrix is symmetric regardless.
PolyGraph loss_extension(const Graph& a, const RationalMatrix& b);

Graph induced_subgraph(const Graph& g, const VertexSubset& vertices);

// Ascending eigenvalues of the weight matrix, in floating point.
std::vector<double> eigenvalues_symmetric(const Graph& g);
double spectral_norm(const Graph& g);

Eigen::MatrixXd to_double_matrix(const RationalMatrix& m);

// --- families ---

Graph path_graph(int n);
Graph cycle_graph(int n);   // n >= 3
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
// `pages` quadrilaterals sharing one common edge; order 2*pages + 2.
Graph book_graph(int pages);
// J_n including the diagonal: the complete-with-loops weight matrix.
Graph complete_with_loops(int n);

// --- formats ---

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t at)
      : std::runtime_error(what + " (byte offset " + std::to_string(at) + ")"), offset(at) {}
};

Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Line-oriented text: '#' comments, an "order M" header, then 1-based
// "i j [weight]" lines (weights rational, default 1).
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// {"order": M, "weights": [[...]]} with entries either numbers or "p/q"
// strings.
Graph parse_adjacency_json(const std::string& text);
std::string to_adjacency_json(const Graph& g);

// Reads a file and dispatches on extension: .g6/.graph6, .edges/.txt, .json.
Graph load_graph(const std::string& path);

}  // namespace gbsp

#endif  // GBSP_GRAPH_HPP
