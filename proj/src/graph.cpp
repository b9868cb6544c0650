#include "gbsp/graph.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>

#include <fstream>
#include <sstream>

namespace gbsp {

Graph from_edge_list(int order, const std::vector<std::tuple<int, int, Rational>>& edges) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  RationalMatrix w = RationalMatrix::Zero(order, order);
  for (const auto& [i, j, weight] : edges) {
    if (i < 0 || j < 0 || i >= order || j >= order)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    if (sgn(w(i, j)) != 0)
      throw std::invalid_argument("duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    w(i, j) = weight;
    w(j, i) = weight;
  }
  return Graph(std::move(w));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int n = a.order(), m = b.order();
  RationalMatrix w = RationalMatrix::Zero(n + m, n + m);
  w.block(0, 0, n, n) = a.weights();
  w.block(n, n, m, m) = b.weights();
  return Graph(std::move(w));
}

Graph tensor_with_loops_complete(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("copy count must be positive");
  std::vector<int> pattern(g.order(), n);
  return Graph(reduced_kronecker_matrix(g.weights(), pattern));
}

Graph reduced_kronecker(const Graph& g, const std::vector<int>& pattern) {
  return Graph(reduced_kronecker_matrix(g.weights(), pattern));
}

PolyGraph prism(const Graph& g) {
  int n = g.order();
  UniPoly x = UniPoly::variable();
  PolyMatrix w(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) w(i, j) = UniPoly();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      UniPoly entry(g.weight(i, j));
      w(i, j) = entry;
      w(n + i, n + j) = entry;
    }
  for (int i = 0; i < n; ++i) {
    w(i, n + i) = x;
    w(n + i, i) = x;
  }
  return PolyGraph(std::move(w));
}

PolyGraph loss_extension(const Graph& a, const RationalMatrix& b) {
  int n = a.order();
  if (b.rows() != n || b.cols() != n)
    throw std::invalid_argument("loss block must be square of the same order");
  UniPoly x = UniPoly::variable();
  PolyMatrix w(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      UniPoly diag(a.weight(i, j));
      w(i, j) = diag;
      w(n + i, n + j) = diag;
      UniPoly off(b(i, j));
      if (i == j) off += x;
      w(i, n + j) = off;
      w(n + j, i) = off;
    }
  return PolyGraph(std::move(w));
}

Graph induced_subgraph(const Graph& g, const VertexSubset& vertices) {
  int k = static_cast<int>(vertices.size());
  for (int t = 0; t < k; ++t) {
    if (vertices[t] < 0 || vertices[t] >= g.order())
      throw std::invalid_argument("vertex out of range: " + std::to_string(vertices[t]));
    if (t > 0 && vertices[t] <= vertices[t - 1])
      throw std::invalid_argument("vertex subset must be strictly increasing");
  }
  RationalMatrix w(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) w(i, j) = g.weight(vertices[i], vertices[j]);
  return Graph(std::move(w));
}

Eigen::MatrixXd to_double_matrix(const RationalMatrix& m) {
  Eigen::MatrixXd r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
  return r;
}

std::vector<double> eigenvalues_symmetric(const Graph& g) {
  if (g.order() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_double_matrix(g.weights()));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration failed");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + g.order());
  return out;
}

double spectral_norm(const Graph& g) {
  double norm = 0;
  for (double v : eigenvalues_symmetric(g)) norm = std::max(norm, std::abs(v));
  return norm;
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<std::tuple<int, int, Rational>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<std::tuple<int, int, Rational>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
  return from_edge_list(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  RationalMatrix w = RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) w(i, j) = 1;
  return Graph(std::move(w));
}

Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("both sides need at least one vertex");
  RationalMatrix w = RationalMatrix::Zero(m + n, m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      w(i, m + j) = 1;
      w(m + j, i) = 1;
    }
  return Graph(std::move(w));
}

Graph book_graph(int pages) {
  if (pages < 1) throw std::invalid_argument("book needs at least one page");
  // Vertices 0,1 span the common edge; page p adds vertices 2+2p, 3+2p.
  std::vector<std::tuple<int, int, Rational>> edges;
  edges.push_back({0, 1, 1});
  for (int p = 0; p < pages; ++p) {
    int u = 2 + 2 * p, v = 3 + 2 * p;
    edges.push_back({0, u, 1});
    edges.push_back({u, v, 1});
    edges.push_back({v, 1, 1});
  }
  return from_edge_list(2 * pages + 2, edges);
}

Graph complete_with_loops(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  RationalMatrix w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = 1;
  return Graph(std::move(w));
}

namespace {

constexpr char kGraph6Header[] = ">>graph6<<";

int graph6_byte(const std::string& s, std::size_t at) {
  if (at >= s.size()) throw ParseError("graph6 data ends early", at);
  unsigned char c = static_cast<unsigned char>(s[at]);
  if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", at);
  return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  std::size_t pos = 0;
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(kGraph6Header, 0) == 0) pos = sizeof(kGraph6Header) - 1;
  if (pos >= s.size()) throw ParseError("empty graph6 input", pos);

  unsigned long n = 0;
  int b0 = graph6_byte(s, pos);
  if (b0 < 63) {
    n = b0;
    ++pos;
  } else {  // b0 == 63, i.e. byte '~'
    if (pos + 1 < s.size() && s[pos + 1] == '~') {
      pos += 2;
      for (int t = 0; t < 6; ++t) n = (n << 6) | graph6_byte(s, pos + t);
      pos += 6;
    } else {
      ++pos;
      for (int t = 0; t < 3; ++t) n = (n << 6) | graph6_byte(s, pos + t);
      pos += 3;
    }
  }
  if (n > 512) throw ParseError("graph6 order too large for this tool", pos);

  std::size_t bits = n * (n - 1) / 2;
  std::size_t groups = (bits + 5) / 6;
  if (s.size() - pos != groups)
    throw ParseError("graph6 data length mismatch: expected " + std::to_string(groups) +
                         " payload bytes, found " + std::to_string(s.size() - pos),
                     pos);

  RationalMatrix w = RationalMatrix::Zero(n, n);
  std::size_t k = 0;
  for (Eigen::Index j = 1; j < static_cast<Eigen::Index>(n); ++j)
    for (Eigen::Index i = 0; i < j; ++i, ++k) {
      int group = graph6_byte(s, pos + k / 6);
      if ((group >> (5 - k % 6)) & 1) {
        w(i, j) = 1;
        w(j, i) = 1;
      }
    }
  // Padding bits must be zero.
  for (std::size_t t = bits; t < groups * 6; ++t) {
    int group = graph6_byte(s, pos + t / 6);
    if ((group >> (5 - t % 6)) & 1)
      throw ParseError("graph6 nonzero padding bit", pos + t / 6);
  }
  return Graph(std::move(w));
}

std::string to_graph6(const Graph& g) {
  if (!g.is_simple_unweighted())
    throw std::invalid_argument("graph6 carries only loop-free 0/1 graphs");
  unsigned long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int t = 2; t >= 0; --t) out.push_back(static_cast<char>(63 + ((n >> (6 * t)) & 63)));
  }
  std::size_t bits = n * (n - 1) / 2;
  std::size_t groups = (bits + 5) / 6;
  std::vector<int> payload(groups, 0);
  std::size_t k = 0;
  for (unsigned long j = 1; j < n; ++j)
    for (unsigned long i = 0; i < j; ++i, ++k)
      if (g.weight(i, j) == 1) payload[k / 6] |= 1 << (5 - k % 6);
  for (int group : payload) out.push_back(static_cast<char>(63 + group));
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int order = -1;
  std::vector<std::tuple<int, int, Rational>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (order < 0) {
      if (first != "order")
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected 'order M' header before edges");
      if (!(ls >> order) || order < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad order");
      continue;
    }
    int i, j;
    try {
      i = std::stoi(first);
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad endpoint '" + first + "'");
    }
    if (!(ls >> j))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": missing second endpoint");
    std::string wtext;
    Rational weight = 1;
    if (ls >> wtext) {
      try {
        weight = parse_rational(wtext);
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad weight '" + wtext + "'");
      }
    }
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
    if (i < 1 || j < 1 || i > order || j > order)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": endpoint out of range (1-based)");
    edges.push_back({i - 1, j - 1, weight});
  }
  if (order < 0) throw std::invalid_argument("missing 'order M' header");
  return from_edge_list(order, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "order " + std::to_string(g.order()) + "\n";
  for (int i = 0; i < g.order(); ++i)
    for (int j = i; j < g.order(); ++j) {
      if (sgn(g.weight(i, j)) == 0) continue;
      out += std::to_string(i + 1) + " " + std::to_string(j + 1);
      if (g.weight(i, j) != 1) out += " " + to_string(g.weight(i, j));
      out += "\n";
    }
  return out;
}

Graph parse_adjacency_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int order = j.at("order").get<int>();
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  const auto& rows = j.at("weights");
  if (static_cast<int>(rows.size()) != order)
    throw std::invalid_argument("weights must have 'order' rows");
  RationalMatrix w(order, order);
  for (int i = 0; i < order; ++i) {
    const auto& row = rows.at(i);
    if (static_cast<int>(row.size()) != order)
      throw std::invalid_argument("weights row " + std::to_string(i) + " has wrong length");
    for (int jx = 0; jx < order; ++jx) {
      const auto& cell = row.at(jx);
      if (cell.is_number_integer())
        w(i, jx) = Rational(cell.get<long>());
      else if (cell.is_string())
        w(i, jx) = parse_rational(cell.get<std::string>());
      else
        throw std::invalid_argument("weights entries must be integers or rational strings");
    }
  }
  return Graph(std::move(w));
}

std::string to_adjacency_json(const Graph& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < g.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < g.order(); ++j) row.push_back(to_string(g.weight(i, j)));
    rows.push_back(row);
  }
  nlohmann::json j;
  j["order"] = g.order();
  j["weights"] = rows;
  return j.dump();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".g6") || ends_with(".graph6")) return parse_graph6(text);
  if (ends_with(".json")) return parse_adjacency_json(text);
  if (ends_with(".edges") || ends_with(".txt")) return parse_edge_list(text);
  throw std::invalid_argument("unknown graph file extension: " + path +
                              " (expected .g6, .graph6, .edges, .txt or .json)");
}

}  // namespace gbsp
