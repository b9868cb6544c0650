// Command-line surface over the gbsp library: polynomial computation with
// cross-path checking, graph-pair distinguishing, coarse-grained output
// distributions, and orbit counting.
//
// Exit codes: 0 success (distinguish: equal), 1 distinguish found a
// difference, 2 any error (parse, validity, size, usage), 3 --check found a
// mismatch between two computation paths.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gbsp/budget.hpp>
#include <gbsp/combinatorics.hpp>
#include <gbsp/gbs.hpp>
#include <gbsp/graph.hpp>
#include <gbsp/matching.hpp>
#include <gbsp/polynomial.hpp>
#include <gbsp/rational.hpp>
#include <gbsp/stats.hpp>

namespace {

constexpr int kOk = 0;
constexpr int kDifferent = 1;
constexpr int kError = 2;
constexpr int kMismatch = 3;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Accepts "3/4", "-2", "0.125", ".5" exactly; decimals become p/10^k.
gbsp::Rational parse_scalar(const std::string& text) {
  if (text.find('/') != std::string::npos) return gbsp::parse_rational(text);
  std::string t = text;
  bool negative = false;
  std::size_t pos = 0;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
    negative = t[pos] == '-';
    ++pos;
  }
  std::string digits;
  int frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < t.size(); ++pos) {
    char ch = t[pos];
    if (ch == '.') {
      if (seen_dot) throw std::invalid_argument("bad number: " + text);
      seen_dot = true;
    } else if (ch >= '0' && ch <= '9') {
      digits += ch;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else {
      throw std::invalid_argument("bad number: " + text);
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad number: " + text);
  gbsp::Int num(digits, 10);
  gbsp::Int den = 1;
  for (int i = 0; i < frac_digits; ++i) den *= 10;
  gbsp::Rational r(num, den);
  r.canonicalize();
  return negative ? gbsp::Rational(-r) : r;
}

std::string pattern_key(const gbsp::ClickPattern& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << content;
}

// ---------------------------------------------------------------------------
// poly

struct PolyOptions {
  std::string which;
  std::string via;
  std::vector<std::string> graphs;
  bool check = false;
  bool split = false;
  std::string format = "text";
  std::string out;
};

// Splits a matrix laid out as [[A,B],[B^T,A]] back into the pair.
void split_doubled(const gbsp::Graph& g, gbsp::Graph* a, gbsp::RationalMatrix* b) {
  int n = g.order();
  if (n % 2 != 0)
    throw std::invalid_argument("--split needs an even-order graph, got order " +
                                std::to_string(n));
  int m = n / 2;
  const gbsp::RationalMatrix& w = g.weights();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!(w(i, j) == w(m + i, m + j)))
        throw std::invalid_argument(
            "--split: diagonal blocks differ at (" + std::to_string(i) + "," +
            std::to_string(j) + "); not a doubled matrix");
  gbsp::RationalMatrix top_left(m, m), top_right(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      top_left(i, j) = w(i, j);
      top_right(i, j) = w(i, m + j);
    }
  *a = gbsp::Graph(std::move(top_left));
  *b = std::move(top_right);
}

nlohmann::ordered_json unipoly_coeff_json(const gbsp::UniPoly& p) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (int d = 0; d <= p.degree(); ++d)
    if (sgn(p.coeff(d)) != 0)
      coeffs[std::to_string(d)] = gbsp::to_string(p.coeff(d));
  return coeffs;
}

int cmd_poly(const PolyOptions& opt) {
  bool bivariate = opt.which == "dgbs" || opt.which == "mdgbs";
  bool needs_pair = opt.which == "mdgbs" && !opt.split;

  if (opt.graphs.empty()) throw std::invalid_argument("poly needs a graph file");
  if (needs_pair && opt.graphs.size() != 2)
    throw std::invalid_argument(
        "mdgbs needs the loss graph as a second file (or --split on a doubled matrix)");
  if (!needs_pair && opt.graphs.size() != 1)
    throw std::invalid_argument("poly --which " + opt.which + " takes one graph file");
  if (opt.split && opt.which != "mdgbs")
    throw std::invalid_argument("--split only applies to --which mdgbs");

  gbsp::Graph loaded = gbsp::load_graph(opt.graphs[0]);
  gbsp::WorkBudget budget = gbsp::WorkBudget::from_env();

  std::string via = opt.via;
  auto reject_via = [&](std::initializer_list<const char*> allowed) {
    for (const char* ok : allowed)
      if (via == ok) return;
    std::string msg = "--which " + opt.which + " supports --via {";
    bool first = true;
    for (const char* ok : allowed) {
      if (!first) msg += "|";
      msg += ok;
      first = false;
    }
    throw std::invalid_argument(msg + "}, got " + via);
  };

  std::string rendered;
  int order = 0;
  nlohmann::ordered_json extra;

  if (!bivariate) {
    auto compute = [&](const std::string& path) -> gbsp::UniPoly {
      if (opt.which == "matching") {
        if (path != "definition")
          throw std::invalid_argument("matching has a single computation path");
        return gbsp::matching_signed(loaded, &budget);
      }
      if (opt.which == "matching-signless") {
        if (path != "definition")
          throw std::invalid_argument("matching has a single computation path");
        return gbsp::matching_signless(loaded, &budget).signless;
      }
      gbsp::GbsPolynomial g = path == "definition"
                                  ? gbsp::gbs_by_definition(loaded, &budget)
                                  : gbsp::gbs_by_prism(loaded, &budget);
      return opt.which == "gbs" ? g.signed_form() : g.signless;
    };

    gbsp::UniPoly result;
    order = loaded.order();
    if (opt.check) {
      if (opt.which == "matching" || opt.which == "matching-signless") {
        gbsp::UniPoly engine = gbsp::matching_signless(loaded, &budget).signless;
        gbsp::UniPoly direct = gbsp::matching_signless_oracle(loaded, &budget).signless;
        if (!(engine == direct)) {
          std::cerr << "check mismatch:\n  engine: " << gbsp::render(engine, "x")
                    << "\n  direct: " << gbsp::render(direct, "x") << "\n";
          return kMismatch;
        }
        result = opt.which == "matching" ? gbsp::alternate_signs(engine, order) : engine;
      } else {
        gbsp::UniPoly by_def = compute("definition");
        gbsp::UniPoly by_prism = compute("prism");
        if (!(by_def == by_prism)) {
          std::cerr << "check mismatch:\n  definition: " << gbsp::render(by_def, "x")
                    << "\n  prism:      " << gbsp::render(by_prism, "x") << "\n";
          return kMismatch;
        }
        result = by_def;
      }
    } else {
      if (via.empty()) via = "definition";
      if (opt.which == "matching" || opt.which == "matching-signless")
        reject_via({"definition"});
      else
        reject_via({"definition", "prism", "duality"});
      if (via == "duality") via = "prism";
      result = compute(via);
    }
    rendered = gbsp::render(result, "x");
    extra["variable"] = "x";
    extra["coefficients"] = unipoly_coeff_json(result);
  } else {
    gbsp::Graph a = loaded;
    gbsp::RationalMatrix b;
    if (opt.which == "mdgbs") {
      if (opt.split)
        split_doubled(loaded, &a, &b);
      else
        b = gbsp::load_graph(opt.graphs[1]).weights();
    }
    auto compute = [&](const std::string& path) -> gbsp::DgbsPolynomial {
      if (opt.which == "dgbs")
        return path == "definition" ? gbsp::dgbs_by_definition(a, &budget)
                                    : gbsp::dgbs_by_duality(a, &budget);
      return path == "definition" ? gbsp::mdgbs_by_definition(a, b, &budget)
                                  : gbsp::mdgbs_by_duality(a, b, &budget);
    };

    gbsp::DgbsPolynomial result;
    if (opt.check) {
      gbsp::DgbsPolynomial by_def = compute("definition");
      gbsp::DgbsPolynomial by_dual = compute("duality");
      if (!(by_def.poly == by_dual.poly)) {
        std::cerr << "check mismatch:\n  definition: " << gbsp::render(by_def.poly)
                  << "\n  duality:    " << gbsp::render(by_dual.poly) << "\n";
        return kMismatch;
      }
      result = by_def;
    } else {
      if (via.empty()) via = "definition";
      reject_via({"definition", "duality", "prism"});
      if (via == "prism") via = "duality";
      result = compute(via);
    }
    order = result.order;
    rendered = gbsp::render(result.poly);
    extra["variables"] = "x,z";
    extra["coefficients"] =
        nlohmann::ordered_json::parse(gbsp::bipoly_to_json(result.poly, result.order))["coeffs"];
  }

  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["which"] = opt.which;
    j["order"] = order;
    j["text"] = rendered;
    for (auto& [k, v] : extra.items()) j[k] = v;
    emit(opt.out, j.dump(2) + "\n");
  } else {
    emit(opt.out, rendered + "\n");
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// distinguish

struct DistinguishCli {
  std::string strategy;
  std::vector<std::string> graphs;
  int n = 2;
  int max_r = -1;
  int total = 6;
  int n_max = 3;
  std::string c;
  double tol = 1e-9;
};

int cmd_distinguish(const DistinguishCli& opt) {
  gbsp::DistinguishOptions o;
  if (opt.strategy == "matching")
    o.strategy = gbsp::DistinguishStrategy::matching;
  else if (opt.strategy == "gbs")
    o.strategy = gbsp::DistinguishStrategy::gbs;
  else if (opt.strategy == "gbs-collision")
    o.strategy = gbsp::DistinguishStrategy::gbs_collision;
  else if (opt.strategy == "dgbs")
    o.strategy = gbsp::DistinguishStrategy::dgbs;
  else if (opt.strategy == "meta")
    o.strategy = gbsp::DistinguishStrategy::meta;
  else
    throw std::invalid_argument(
        "--strategy must be one of matching, gbs, gbs-collision, dgbs, meta");
  o.n = opt.n;
  o.max_r = opt.max_r;
  o.total = opt.total;
  o.n_max = opt.n_max;
  if (!opt.c.empty()) o.c = parse_scalar(opt.c).get_d();
  o.tol = opt.tol;

  gbsp::Graph a = gbsp::load_graph(opt.graphs[0]);
  gbsp::Graph b = gbsp::load_graph(opt.graphs[1]);
  gbsp::DistinguishReport report = gbsp::distinguish(a, b, o);
  std::cout << (report.different ? "different" : "equal") << ": " << report.detail << "\n";
  return report.different ? kDifferent : kOk;
}

// ---------------------------------------------------------------------------
// distribution

struct DistributionCli {
  std::string kind;
  std::string graph;
  std::string lossy;
  std::string c;
  std::string d;
  std::string z;
  int total = 0;
  int max_count = -1;
  int n_max = -1;
  int max_total = -1;
  int kbar = 0;
  std::string out;
  std::string format = "csv";
};

std::string render_distribution(const gbsp::CoarseDistribution& dist,
                                const std::string& format) {
  if (format == "csv") return dist.to_csv();
  if (format == "json") return dist.to_json() + "\n";
  std::string s;
  for (const auto& row : dist.rows)
    s += row.key + " " + format_double(row.probability) + "\n";
  return s;
}

int cmd_distribution(const DistributionCli& opt) {
  if (!opt.d.empty() && !opt.z.empty())
    throw std::invalid_argument("give either --d or --z, not both");

  if (opt.kbar > 0) {
    // Closed form for the complete graph with loops: no graph file, no
    // matrices, valid for 0 < c < 1/M at any size.
    if (opt.kind != "orbit")
      throw std::invalid_argument("--closed-form-kbar only supports --kind orbit");
    if (opt.c.empty()) throw std::invalid_argument("--closed-form-kbar needs --c");
    int modes = opt.kbar;
    double c = parse_scalar(opt.c).get_d();
    double d = opt.d.empty() ? 0.0 : parse_scalar(opt.d).get_d();
    int max_count = opt.max_count < 0 ? std::max(opt.total, 1) : opt.max_count;

    gbsp::CoarseDistribution dist;
    dist.kind = gbsp::CoarseKind::orbit;
    dist.encoding = gbsp::EncodingKind::pure;
    dist.modes = modes;
    dist.c = c;
    dist.d.assign(modes, d);
    dist.det_sigma_q = 1.0 / (1.0 - c * c * double(modes) * double(modes));
    double quad = 2.0 * modes * d * d * (1.0 - c * modes);
    dist.prefactor = std::sqrt(1.0 - c * c * double(modes) * double(modes)) *
                     std::exp(-0.5 * quad);
    for (const gbsp::Orbit& orbit : gbsp::enumerate_orbits(modes, opt.total, max_count))
      dist.rows.push_back({pattern_key(orbit.representative),
                           gbsp::orbit_probability_complete_loops(modes, c, d, orbit)});
    emit(opt.out, render_distribution(dist, opt.format));
    return kOk;
  }

  if (opt.graph.empty()) throw std::invalid_argument("distribution needs a graph file");
  gbsp::Graph a = gbsp::load_graph(opt.graph);

  std::optional<gbsp::Graph> b;
  if (!opt.lossy.empty()) b = gbsp::load_graph(opt.lossy);
  gbsp::EncodingKind kind = b ? gbsp::EncodingKind::lossy : gbsp::EncodingKind::pure;

  gbsp::Rational c;
  if (!opt.c.empty()) {
    c = parse_scalar(opt.c);
  } else {
    double norm = gbsp::spectral_norm(a);
    c = norm > 0.0 ? gbsp::Rational(mpq_class(0.8 / norm)) : gbsp::Rational(1, 2);
  }

  gbsp::RationalVector d(a.order());
  for (int i = 0; i < a.order(); ++i) d(i) = 0;
  if (!opt.d.empty()) {
    gbsp::Rational dv = parse_scalar(opt.d);
    for (int i = 0; i < a.order(); ++i) d(i) = dv;
  } else if (!opt.z.empty()) {
    d = gbsp::uniform_displacement(kind, a, b ? &*b : nullptr, c, parse_scalar(opt.z));
  }

  try {
    gbsp::GaussianEncoding e = gbsp::build_encoding(kind, a, b ? &*b : nullptr, c, d);
    gbsp::CoarseDistribution dist;
    if (opt.kind == "orbit") {
      int max_count = opt.max_count < 0 ? std::max(opt.total, 1) : opt.max_count;
      dist = gbsp::orbit_distribution(e, opt.total, max_count);
    } else if (opt.kind == "meta") {
      int n_max = opt.n_max < 0 ? std::max(opt.total, 1) : opt.n_max;
      dist = gbsp::meta_orbit_distribution(e, opt.total, n_max);
    } else if (opt.kind == "total") {
      int max_total = opt.max_total < 0 ? opt.total : opt.max_total;
      dist = gbsp::total_photon_distribution(e, max_total);
    } else {
      throw std::invalid_argument("--kind must be one of orbit, meta, total");
    }
    emit(opt.out, render_distribution(dist, opt.format));
  } catch (const gbsp::ValidityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    double norm = gbsp::spectral_norm(a);
    if (b) {
      double bound = norm + gbsp::spectral_norm(*b);
      if (bound > 0.0)
        std::cerr << "scales with 0 < c < 1/(||A||_2 + ||B||_2) = "
                  << format_double(1.0 / bound) << " are always valid\n";
    } else if (norm > 0.0) {
      std::cerr << "valid scales for this graph: 0 < c < 1/||A||_2 = "
                << format_double(1.0 / norm) << "\n";
    }
    return kError;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// counts

struct CountsCli {
  int modes = 0;
  int n = -1;
  int r = -1;
  int total = -1;
  int max_count = -1;
  bool knapsack = false;
  int m = -1;
  std::vector<int> caps;
};

int cmd_counts(const CountsCli& opt) {
  std::ostringstream out;
  if (opt.knapsack) {
    if (opt.total < 0 || opt.m < 0)
      throw std::invalid_argument("--knapsack needs --total and --m");
    gbsp::KnapsackSolution sol =
        gbsp::max_orbit_knapsack(opt.modes, opt.total, opt.m, opt.caps);
    out << "multiplicities k = " << pattern_key(sol.multiplicities) << "\n";
    out << "factorial product = " << sol.factorial_product.get_str() << "\n";
    out << "log cost = " << format_double(sol.log_cost) << "\n";
  } else if (opt.n >= 0 && opt.r >= 0) {
    gbsp::CountIdentity id = gbsp::verify_count_identity(opt.modes, opt.n, opt.r);
    for (const gbsp::Orbit& orbit :
         gbsp::enumerate_orbits(opt.modes, 2 * opt.r, opt.n)) {
      gbsp::Int weight = gbsp::combinatorial_weight(orbit.representative, opt.n);
      out << pattern_key(orbit.representative) << " size " << orbit.size.get_str()
          << " weight " << weight.get_str() << " contributes "
          << gbsp::Int(orbit.size * weight).get_str() << "\n";
    }
    out << "identity: " << id.lhs.get_str() << " = " << id.rhs.get_str()
        << " (binomial(" << opt.n * opt.modes << ", " << 2 * opt.r << "))\n";
    if (!id.ok) {
      std::cerr << out.str() << "error: identity failed\n";
      return kError;
    }
  } else if (opt.total >= 0) {
    int max_count = opt.max_count < 0 ? std::max(opt.total, 1) : opt.max_count;
    std::vector<gbsp::Orbit> orbits =
        gbsp::enumerate_orbits(opt.modes, opt.total, max_count);
    gbsp::Int total_size = 0;
    for (const gbsp::Orbit& orbit : orbits) {
      out << pattern_key(orbit.representative) << " size " << orbit.size.get_str()
          << "\n";
      total_size += orbit.size;
    }
    out << "orbits: " << orbits.size() << " patterns: " << total_size.get_str()
        << "\n";
    for (int mc = 1; mc <= std::min(max_count, opt.total); ++mc) {
      gbsp::Int count = gbsp::meta_orbit_count(opt.modes, {opt.total, mc});
      if (count > 0)
        out << "meta-orbit Delta_" << mc << ": " << count.get_str() << " orbits\n";
    }
  } else {
    throw std::invalid_argument(
        "counts needs --n and --r (identity), --total (enumeration), or --knapsack");
  }
  std::cout << out.str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact matching, GBS and displaced-GBS polynomials, duality checks, and "
      "coarse-grained photon statistics for weighted graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "print help for every subcommand");

  PolyOptions poly;
  CLI::App* poly_cmd =
      app.add_subcommand("poly", "compute a graph polynomial (exact arithmetic)");
  poly_cmd
      ->add_option("--which", poly.which,
                   "matching | matching-signless | gbs | gbs-signless | dgbs | mdgbs")
      ->required();
  poly_cmd->add_option(
      "--via", poly.via,
      "computation path: definition | duality | prism (default definition)");
  poly_cmd->add_flag("--check", poly.check,
                     "run two independent paths; exit 3 if they disagree");
  poly_cmd->add_flag("--split", poly.split,
                     "mdgbs: read one doubled matrix [[A,B],[B^T,A]] and split it");
  poly_cmd->add_option("--format", poly.format, "text | json (default text)");
  poly_cmd->add_option("--out", poly.out, "write to this file instead of stdout");
  poly_cmd->add_option("graphs", poly.graphs,
                       "graph file(s): .edges/.txt, .g6/.graph6, or .json");

  DistinguishCli dist;
  CLI::App* dist_cmd = app.add_subcommand(
      "distinguish", "pit an invariant against a pair of graphs (exit 0 equal, 1 different)");
  dist_cmd
      ->add_option("--strategy", dist.strategy,
                   "matching | gbs | gbs-collision | dgbs | meta")
      ->required();
  dist_cmd->add_option("--n", dist.n, "gbs-collision: tensor copies (default 2)");
  dist_cmd->add_option("--max-r", dist.max_r,
                       "gbs-collision: highest r probed (default floor(nM/2))");
  dist_cmd->add_option("--total", dist.total, "meta: total photon number (default 6)");
  dist_cmd->add_option("--n-max", dist.n_max, "meta: largest count probed (default 3)");
  dist_cmd->add_option("--c", dist.c, "meta: scale (default 0.8 / max spectral norm)");
  dist_cmd->add_option("--tol", dist.tol, "meta: comparison tolerance (default 1e-9)");
  dist_cmd->add_option("graphs", dist.graphs, "two graph files")->expected(2);

  DistributionCli distr;
  CLI::App* distr_cmd = app.add_subcommand(
      "distribution", "coarse-grained output distribution of an encoded graph");
  distr_cmd->add_option("--kind", distr.kind, "orbit | meta | total")->required();
  distr_cmd->add_option("--c", distr.c,
                        "scale, exact ('1/55') or decimal ('0.25'); default 0.8/||A||_2");
  distr_cmd->add_option("--d", distr.d, "uniform displacement entry (default 0)");
  distr_cmd->add_option("--z", distr.z,
                        "target uniform z; solves for the displacement that reaches it");
  distr_cmd->add_option("--total", distr.total, "total photon number (orbit, meta)");
  distr_cmd->add_option("--max-count", distr.max_count,
                        "orbit: largest per-mode count (default --total)");
  distr_cmd->add_option("--n-max", distr.n_max,
                        "meta: number of Delta rows (default --total)");
  distr_cmd->add_option("--max-total", distr.max_total,
                        "total: largest total photon number tabulated");
  distr_cmd->add_option("--lossy", distr.lossy, "loss graph B: use the lossy encoding");
  distr_cmd->add_option("--closed-form-kbar", distr.kbar,
                        "complete graph with loops on this many modes, no graph file");
  distr_cmd->add_option("--out", distr.out, "write to this file instead of stdout");
  distr_cmd->add_option("--format", distr.format, "csv | json | text (default csv)");
  distr_cmd->add_option("graph", distr.graph, "graph file");

  CountsCli counts;
  CLI::App* counts_cmd = app.add_subcommand(
      "counts", "orbit enumeration, counting identities, and the knapsack optimum");
  counts_cmd->add_option("--M", counts.modes, "number of modes")->required();
  counts_cmd->add_option("--n", counts.n, "identity: per-mode count bound");
  counts_cmd->add_option("--r", counts.r, "identity: number of matched pairs");
  counts_cmd->add_option("--total", counts.total, "enumeration: total photon number");
  counts_cmd->add_option("--max-count", counts.max_count,
                         "enumeration: largest per-mode count (default --total)");
  counts_cmd->add_flag("--knapsack", counts.knapsack,
                       "find the multiplicity vector minimizing prod k_i!");
  counts_cmd->add_option("--m", counts.m, "knapsack: largest count value");
  counts_cmd->add_option("--caps", counts.caps, "knapsack: per-value caps k_i <= cap_i");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (poly_cmd->parsed()) return cmd_poly(poly);
    if (dist_cmd->parsed()) return cmd_distinguish(dist);
    if (distr_cmd->parsed()) return cmd_distribution(distr);
    if (counts_cmd->parsed()) return cmd_counts(counts);
    std::cerr << "error: no subcommand\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
