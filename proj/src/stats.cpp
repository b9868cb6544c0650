#include "gbsp/stats.hpp"

#include "gbsp/gbs.hpp"
#include "gbsp/hafnian.hpp"
#include "gbsp/linear.hpp"
#include "gbsp/matching.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gbsp {

namespace {

double clamp_probability(double p) {
  if (p < 0.0) {
    if (p < -1e-12) throw std::logic_error("probability went negative: " + std::to_string(p));
    return 0.0;
  }
  if (p > 1.0 + 1e-9) throw std::logic_error("probability exceeds one: " + std::to_string(p));
  return p;
}

Eigen::MatrixXd assemble_i_minus_xc(const GaussianEncoding& e) {
  int m = e.modes;
  double c = e.c.get_d();
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(2 * m, 2 * m);
  Eigen::MatrixXd ca = c * to_double_matrix(e.a);
  out.block(0, m, m, m) = -ca;
  out.block(m, 0, m, m) = -ca;
  if (e.kind == EncodingKind::lossy) {
    Eigen::MatrixXd cb = c * to_double_matrix(e.b);
    out.block(0, 0, m, m) -= cb;
    out.block(m, m, m, m) -= cb;
  }
  return out;
}

GaussianEncoding assemble(EncodingKind kind, const Graph& a, const Graph* b, const Rational& c,
                          const RationalVector& d) {
  GaussianEncoding e;
  e.kind = kind;
  e.modes = a.order();
  e.a = a.weights();
  if (kind == EncodingKind::lossy) {
    if (!b) throw std::invalid_argument("lossy encoding needs the loss block");
    if (b->order() != a.order()) throw std::invalid_argument("loss block order mismatch");
    e.b = b->weights();
  }
  e.c = c;
  if (sgn(c) <= 0) throw ValidityError("scale c must be positive");
  if (d.size() == 0) {
    e.d = RationalVector::Zero(e.modes);
  } else {
    if (d.size() != e.modes) throw std::invalid_argument("displacement length mismatch");
    e.d = d;
  }
  for (int i = 0; i < e.modes; ++i)
    if (sgn(e.d(i)) != 0) e.displaced = true;

  if (e.modes == 0) return e;

  Eigen::MatrixXd imxc = assemble_i_minus_xc(e);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(imxc);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration failed");
  double det = 1.0;
  for (int i = 0; i < 2 * e.modes; ++i) det *= solver.eigenvalues()(i);
  if (solver.eigenvalues()(0) <= 1e-12)
    throw ValidityError("no Gaussian state at this scale: I - XC is not positive definite");
  if (det > 1.0 + 1e-9)
    throw ValidityError("no Gaussian state at this scale: det sigma_Q < 1");
  e.det_i_minus_xc = det;
  e.det_sigma_q = 1.0 / det;

  Eigen::VectorXd dd(e.modes);
  for (int i = 0; i < e.modes; ++i) dd(i) = e.d(i).get_d();
  Eigen::VectorXd big(2 * e.modes);
  big << dd, dd;
  e.quad_form = big.dot(imxc * big);
  e.prefactor = std::sqrt(e.det_i_minus_xc) * std::exp(-0.5 * e.quad_form);

  // z^T = d^T (I - cA [- cB]); the matrix is symmetric here.
  double c_d = e.c.get_d();
  Eigen::MatrixXd zmat =
      Eigen::MatrixXd::Identity(e.modes, e.modes) - c_d * to_double_matrix(e.a);
  if (kind == EncodingKind::lossy) zmat -= c_d * to_double_matrix(e.b);
  Eigen::VectorXd zv = zmat * dd;
  e.z.assign(zv.data(), zv.data() + e.modes);
  e.uniform_z = true;
  for (int i = 1; i < e.modes; ++i)
    if (std::abs(e.z[i] - e.z[0]) > 1e-9 * std::max(1.0, std::abs(e.z[0]))) e.uniform_z = false;
  e.z_value = e.modes > 0 ? e.z[0] : 0.0;

  if (kind == EncodingKind::lossy) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> bsolver(to_double_matrix(e.b));
    e.physical = bsolver.eigenvalues()(0) >= -1e-9;
  }
  return e;
}

}  // namespace

GaussianEncoding build_encoding_pure(const Graph& a, const Rational& c, const RationalVector& d) {
  return assemble(EncodingKind::pure, a, nullptr, c, d);
}

GaussianEncoding build_encoding_lossy(const Graph& a, const Graph& b, const Rational& c,
                                      const RationalVector& d) {
  return assemble(EncodingKind::lossy, a, &b, c, d);
}

GaussianEncoding build_encoding(EncodingKind kind, const Graph& a, const Graph* b,
                                const Rational& c, const RationalVector& d) {
  return assemble(kind, a, b, c, d);
}

namespace {

void check_orbit(const GaussianEncoding& e, const ClickPattern& rep) {
  if (static_cast<int>(rep.size()) != e.modes)
    throw std::invalid_argument("orbit length does not match the mode count");
  for (int v : rep)
    if (v < 0) throw std::invalid_argument("click counts must be nonnegative");
}

// m_i copies of vertex i occupy rows [i*nmax, i*nmax + m_i) of the tensor
// matrix, so a member pattern maps to a bitmask of kept copies.
std::uint64_t member_mask(const ClickPattern& m, int nmax) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int t = 0; t < m[i]; ++t) mask |= std::uint64_t(1) << (i * nmax + t);
  return mask;
}

RationalMatrix tensor_matrix(const RationalMatrix& w, int nmax) {
  std::vector<int> pattern(w.rows(), nmax);
  return reduced_kronecker_matrix(w, pattern);
}

// sum_r m(residual, r) c^r z^{degree}, read off exact matching coefficients.
double evaluate_member(const std::vector<Rational>& coeffs, int vertex_count, double c, double z) {
  double val = 0.0;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (sgn(coeffs[d]) == 0) continue;
    int gap = vertex_count - static_cast<int>(d);
    if (gap < 0 || gap % 2 != 0) throw std::logic_error("matching coefficient parity violated");
    val += coeffs[d].get_d() * std::pow(c, gap / 2) * std::pow(z, static_cast<double>(d));
  }
  return val;
}

// One engine per (encoding, copy bound): all orbits and members with counts
// <= nmax share its memo.
struct PureContext {
  int nmax;
  MatchingEngine<Rational> engine;

  PureContext(const GaussianEncoding& e, int nmax_)
      : nmax(nmax_), engine(tensor_matrix(e.a, nmax_)) {}

  double member_value(const GaussianEncoding& e, const ClickPattern& m, int total) {
    std::vector<Rational> coeffs = engine.signless_on_mask(member_mask(m, nmax));
    return evaluate_member(coeffs, total, e.c.get_d(), e.z_value);
  }
};

struct LossyContext {
  int nmax;
  int half;  // vertices in each copy of the doubled tensor
  MatchingEngine<Rational> engine;

  static RationalMatrix doubled_tensor(const GaussianEncoding& e, int nmax) {
    RationalMatrix ta = tensor_matrix(e.a, nmax);
    RationalMatrix tb = tensor_matrix(e.b, nmax);
    int n = static_cast<int>(ta.rows());
    RationalMatrix big = RationalMatrix::Zero(2 * n, 2 * n);
    big.block(0, 0, n, n) = ta;
    big.block(n, n, n, n) = ta;
    big.block(0, n, n, n) = tb;
    big.block(n, 0, n, n) = tb.transpose();
    return big;
  }

  LossyContext(const GaussianEncoding& e, int nmax_)
      : nmax(nmax_), half(e.modes * nmax_), engine(doubled_tensor(e, nmax_)) {}

  double member_value(const GaussianEncoding& e, const ClickPattern& m, int total) {
    std::uint64_t mask = member_mask(m, nmax);
    std::vector<Rational> coeffs = engine.signless_on_mask(mask | (mask << half));
    return evaluate_member(coeffs, 2 * total, e.c.get_d(), e.z_value);
  }
};

void require_uniform_z(const GaussianEncoding& e) {
  if (e.displaced && !e.uniform_z)
    throw ValidityError(
        "the displacement does not give a uniform z; solve for one with uniform_displacement");
}

double orbit_probability_pure_matching(const GaussianEncoding& e, const ClickPattern& rep,
                                       PureContext& ctx) {
  require_uniform_z(e);
  int total = pattern_total(rep);
  double acc = 0.0;
  for (const ClickPattern& m : orbit_members(rep)) {
    double val = ctx.member_value(e, m, total);
    acc += val * val;
  }
  return clamp_probability(e.prefactor * acc / pattern_factorial(rep).get_d());
}

double orbit_probability_lossy(const GaussianEncoding& e, const ClickPattern& rep,
                               LossyContext& ctx) {
  require_uniform_z(e);
  int total = pattern_total(rep);
  double acc = 0.0;
  for (const ClickPattern& m : orbit_members(rep)) acc += ctx.member_value(e, m, total);
  return clamp_probability(e.prefactor * acc / pattern_factorial(rep).get_d());
}

}  // namespace

Rational orbit_haf_square_moment(const Graph& a, const ClickPattern& representative) {
  Rational acc = 0;
  if (pattern_total(representative) % 2 != 0) return acc;
  for (const ClickPattern& m : orbit_members(representative)) {
    RationalMatrix reduced = reduced_kronecker_matrix(a.weights(), m);
    Rational h = hafnian(reduced);
    if (sgn(h) != 0) acc += h * h;
  }
  return acc;
}

double orbit_probability_hafnian(const GaussianEncoding& e, const Orbit& o) {
  if (e.kind != EncodingKind::pure || e.displaced)
    throw std::invalid_argument("the hafnian path covers pure zero-displacement encodings");
  check_orbit(e, o.representative);
  int total = pattern_total(o.representative);
  if (total % 2 != 0) return 0.0;
  Rational scaled = orbit_haf_square_moment(Graph(e.a), o.representative) *
                    pow_rational(e.c, total) / Rational(pattern_factorial(o.representative));
  return clamp_probability(e.prefactor * scaled.get_d());
}

double orbit_probability_matching(const GaussianEncoding& e, const Orbit& o) {
  if (e.kind != EncodingKind::pure)
    throw std::invalid_argument("the matching path covers pure encodings");
  check_orbit(e, o.representative);
  int nmax = std::max(1, pattern_max(o.representative));
  PureContext ctx(e, nmax);
  return orbit_probability_pure_matching(e, o.representative, ctx);
}

double orbit_probability(const GaussianEncoding& e, const Orbit& o) {
  check_orbit(e, o.representative);
  if (e.kind == EncodingKind::pure) {
    if (!e.displaced) return orbit_probability_hafnian(e, o);
    return orbit_probability_matching(e, o);
  }
  int nmax = std::max(1, pattern_max(o.representative));
  LossyContext ctx(e, nmax);
  return orbit_probability_lossy(e, o.representative, ctx);
}

double orbit_probability_complete_loops(int modes, double c, double d, const Orbit& o) {
  if (modes < 1) throw std::invalid_argument("need at least one mode");
  if (static_cast<int>(o.representative.size()) != modes)
    throw std::invalid_argument("orbit length does not match the mode count");
  if (c <= 0.0 || c * modes >= 1.0)
    throw ValidityError("complete graph with loops needs 0 < c < 1/M");
  double z = d * (1.0 - c * modes);
  double det = 1.0 - c * c * modes * modes;
  double quad = 2.0 * modes * d * d * (1.0 - c * modes);
  double prefactor = std::sqrt(det) * std::exp(-0.5 * quad);
  int s = pattern_total(o.representative);
  double val = 0.0;
  for (int r = 0; 2 * r <= s; ++r) {
    Int two_r;
    mpz_mul_2exp(two_r.get_mpz_t(), Int(1).get_mpz_t(), r);
    Rational term =
        Rational(factorial(s)) / Rational(factorial(s - 2 * r) * factorial(r) * two_r);
    val += term.get_d() * std::pow(z, s - 2 * r) * std::pow(c, r);
  }
  double p = prefactor * orbit_size(o.representative).get_d() * val * val /
             pattern_factorial(o.representative).get_d();
  return clamp_probability(p);
}

RationalVector uniform_displacement(EncodingKind kind, const Graph& a, const Graph* b,
                                    const Rational& c, const Rational& z_target) {
  int m = a.order();
  RationalMatrix mat = -c * a.weights();
  for (int i = 0; i < m; ++i) mat(i, i) += 1;
  if (kind == EncodingKind::lossy) {
    if (!b) throw std::invalid_argument("lossy encoding needs the loss block");
    if (b->order() != m) throw std::invalid_argument("loss block order mismatch");
    mat -= c * b->weights();
  }
  RationalVector rhs = RationalVector::Constant(m, z_target);
  LinearSolution sol;
  try {
    sol = solve_linear_exact(mat.transpose(), rhs);
  } catch (const std::invalid_argument&) {
    throw ValidityError("no displacement reaches a uniform z at this scale");
  }
  if (!sol.unique)
    throw ValidityError("uniform displacement system is singular (rank " +
                        std::to_string(sol.rank) + " of " + std::to_string(m) + ")");
  return sol.solution;
}

namespace {

std::string pattern_key(const ClickPattern& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  out += ")";
  return out;
}

CoarseDistribution distribution_shell(const GaussianEncoding& e, CoarseKind kind) {
  CoarseDistribution out;
  out.kind = kind;
  out.encoding = e.kind;
  out.modes = e.modes;
  out.c = e.c.get_d();
  out.d.reserve(e.modes);
  for (int i = 0; i < e.modes; ++i) out.d.push_back(e.d(i).get_d());
  out.det_sigma_q = e.det_sigma_q;
  out.prefactor = e.prefactor;
  return out;
}

}  // namespace

CoarseDistribution total_photon_distribution(const GaussianEncoding& e, int max_total) {
  if (e.kind != EncodingKind::pure || e.displaced)
    throw std::invalid_argument(
        "the total-photon generating function covers pure zero-displacement encodings");
  if (max_total < 0 || max_total % 2 != 0)
    throw std::invalid_argument("max total must be even and nonnegative");
  std::vector<double> lambdas = eigenvalues_symmetric(Graph(e.a));
  std::vector<double> coeffs = truncated_inverse_sqrt_product(lambdas, e.c.get_d(), max_total);
  CoarseDistribution out = distribution_shell(e, CoarseKind::total);
  for (int t = 0; t <= max_total; t += 2)
    out.rows.push_back({std::to_string(t), clamp_probability(e.prefactor * coeffs[t])});
  return out;
}

CoarseDistribution orbit_distribution(const GaussianEncoding& e, int total, int max_count) {
  CoarseDistribution out = distribution_shell(e, CoarseKind::orbit);
  for (const Orbit& o : enumerate_orbits(e.modes, total, max_count))
    out.rows.push_back({pattern_key(o.representative), orbit_probability(e, o)});
  return out;
}

CoarseDistribution meta_orbit_distribution(const GaussianEncoding& e, int total, int n_max) {
  if (total < 1) throw std::invalid_argument("total must be positive");
  if (n_max < 1 || n_max > total) throw std::invalid_argument("need 1 <= n_max <= total");
  std::vector<double> sums(n_max + 1, 0.0);
  for (const Orbit& o : enumerate_orbits(e.modes, total, n_max))
    sums[pattern_max(o.representative)] += orbit_probability(e, o);
  CoarseDistribution out = distribution_shell(e, CoarseKind::meta);
  for (int n = 1; n <= n_max; ++n)
    out.rows.push_back({"|n|=" + std::to_string(total) + ",Delta=" + std::to_string(n),
                        clamp_probability(sums[n])});
  return out;
}

std::string CoarseDistribution::to_csv() const {
  std::string out = "key,probability\n";
  char buf[64];
  for (const CoarseRow& row : rows) {
    bool quote = row.key.find(',') != std::string::npos;
    if (quote) out += '"';
    out += row.key;
    if (quote) out += '"';
    std::snprintf(buf, sizeof buf, "%.17g", row.probability);
    out += ',';
    out += buf;
    out += '\n';
  }
  return out;
}

std::string CoarseDistribution::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case CoarseKind::orbit: j["kind"] = "orbit"; break;
    case CoarseKind::meta: j["kind"] = "meta"; break;
    case CoarseKind::total: j["kind"] = "total"; break;
  }
  j["encoding"] = encoding == EncodingKind::pure ? "pure" : "lossy";
  j["modes"] = modes;
  j["c"] = c;
  j["d"] = d;
  j["det_sigma_q"] = det_sigma_q;
  j["prefactor"] = prefactor;
  nlohmann::json rows_json = nlohmann::json::array();
  for (const CoarseRow& row : rows)
    rows_json.push_back({{"key", row.key}, {"probability", row.probability}});
  j["rows"] = rows_json;
  return j.dump(2);
}

DistinguishReport distinguish(const Graph& ga, const Graph& gb, const DistinguishOptions& opts) {
  if (ga.order() != gb.order()) throw std::invalid_argument("graphs must share the order");
  DistinguishReport out;
  switch (opts.strategy) {
    case DistinguishStrategy::matching: {
      UniPoly pa = matching_signed(ga);
      UniPoly pb = matching_signed(gb);
      if (pa == pb) {
        out.detail = "matching polynomials agree: " + render(pa, "x");
      } else {
        out.different = true;
        out.detail = "matching polynomial difference: " + render(pa - pb, "x");
      }
      break;
    }
    case DistinguishStrategy::gbs: {
      UniPoly pa = gbs_by_definition(ga).signed_form();
      UniPoly pb = gbs_by_definition(gb).signed_form();
      if (pa == pb) {
        out.detail = "GBS polynomials agree: " + render(pa, "x");
      } else {
        out.different = true;
        out.detail = "GBS polynomial difference: " + render(pa - pb, "x");
      }
      break;
    }
    case DistinguishStrategy::gbs_collision: {
      if (opts.n < 1) throw std::invalid_argument("collision bound must be positive");
      Graph ta = tensor_with_loops_complete(ga, opts.n);
      Graph tb = tensor_with_loops_complete(gb, opts.n);
      int top = opts.max_r < 0 ? ta.order() / 2 : opts.max_r;
      for (int r = 0; r <= top; ++r) {
        Rational va = gbs_coefficient(ta, r);
        Rational vb = gbs_coefficient(tb, r);
        if (va != vb) {
          out.different = true;
          out.detail = "collision-resolved GBS coefficients split at r=" + std::to_string(r) +
                       ": " + to_string(va) + " vs " + to_string(vb);
          return out;
        }
      }
      out.detail = "collision-resolved GBS coefficients agree through r=" + std::to_string(top);
      break;
    }
    case DistinguishStrategy::dgbs: {
      BiPoly pa = dgbs_by_definition(ga).poly;
      BiPoly pb = dgbs_by_definition(gb).poly;
      if (pa == pb) {
        out.detail = "displaced GBS polynomials agree";
      } else {
        out.different = true;
        out.detail = "displaced GBS polynomial difference: " + render(pa - pb);
      }
      break;
    }
    case DistinguishStrategy::meta: {
      double c = opts.c;
      if (c <= 0.0) {
        double norm = std::max(spectral_norm(ga), spectral_norm(gb));
        c = norm < 1e-12 ? 0.5 : 0.8 / norm;
      }
      Rational cq(c);
      cq.canonicalize();
      GaussianEncoding ea = build_encoding_pure(ga, cq, RationalVector());
      GaussianEncoding eb = build_encoding_pure(gb, cq, RationalVector());
      CoarseDistribution da = meta_orbit_distribution(ea, opts.total, opts.n_max);
      CoarseDistribution db = meta_orbit_distribution(eb, opts.total, opts.n_max);
      for (std::size_t i = 0; i < da.rows.size(); ++i) {
        double diff = da.rows[i].probability - db.rows[i].probability;
        if (std::abs(diff) > opts.tol) {
          out.different = true;
          out.detail = "meta-orbit " + da.rows[i].key + " probabilities split: " +
                       std::to_string(da.rows[i].probability) + " vs " +
                       std::to_string(db.rows[i].probability);
          return out;
        }
      }
      out.detail = "meta-orbit distributions agree at |n|=" + std::to_string(opts.total) +
                   " within " + std::to_string(opts.tol);
      break;
    }
  }
  return out;
}

}  // namespace gbsp
