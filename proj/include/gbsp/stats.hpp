#ifndef GBSP_STATS_HPP
#define GBSP_STATS_HPP

#include "gbsp/combinatorics.hpp"
#include "gbsp/graph.hpp"
#include "gbsp/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gbsp {

// An encoding parameter escapes the region where the Gaussian state exists
// (or a displacement cannot be made uniform).
struct ValidityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EncodingKind { pure, lossy };

// A graph embedded in a Gaussian state. The user supplies the raw adjacency
// A (and loss block B), the scale c and the displacement d; every derived
// quantity uses cA and cB. With X = [[0,I],[I,0]] and C the doubled matrix,
// sigma_Q^{-1} = I - XC, so no matrix is ever inverted:
//   pure:  I - XC = [[I, -cA], [-cA, I]]
//   lossy: I - XC = [[I-cB, -cA], [-cA, I-cB]]
// prefactor = sqrt(det(I-XC)) * exp(-1/2 D^T (I-XC) D) with D = (d,d).
struct GaussianEncoding {
  EncodingKind kind = EncodingKind::pure;
  int modes = 0;
  RationalMatrix a;
  RationalMatrix b;  // lossy only
  Rational c;
  RationalVector d;

  double det_i_minus_xc = 1.0;
  double det_sigma_q = 1.0;
  double quad_form = 0.0;  // D^T (I-XC) D
  double prefactor = 1.0;
  std::vector<double> z;  // (I - cA [- cB]) d per mode
  bool uniform_z = true;
  double z_value = 0.0;
  bool displaced = false;
  bool physical = true;  // lossy kind: whether B is positive semidefinite
};

GaussianEncoding build_encoding_pure(const Graph& a, const Rational& c, const RationalVector& d);
GaussianEncoding build_encoding_lossy(const Graph& a, const Graph& b, const Rational& c,
                                      const RationalVector& d);
// Dispatcher form; b may be null for the pure kind.
GaussianEncoding build_encoding(EncodingKind kind, const Graph& a, const Graph* b,
                                const Rational& c, const RationalVector& d);

// Probability of one orbit of click patterns. Dispatch:
//   pure, d = 0:  prefactor * c^|n| * sum_m haf^2(A_m) / n!
//   pure, d != 0: prefactor / n! * sum_m (sum_r m(A_m,r) c^r z^{|n|-2r})^2
//   lossy:        prefactor / n! * sum_m sum_r m([[A_m,B_m],[B_m,A_m]],r) c^r z^{2|n|-2r}
// where m runs over the orbit members, A_m is the reduced Kronecker matrix
// placing m_i copies of vertex i, and n! is the member factorial. Matching
// coefficients are computed exactly and evaluated at the numeric c and z.
double orbit_probability(const GaussianEncoding& e, const Orbit& o);

// The two pure computation paths, exposed separately so they can be played
// against each other: direct per-member hafnians (d = 0 only) versus the
// matching-polynomial evaluation.
double orbit_probability_hafnian(const GaussianEncoding& e, const Orbit& o);
double orbit_probability_matching(const GaussianEncoding& e, const Orbit& o);

// sum over orbit members m of haf^2 of the reduced Kronecker matrix of the
// pattern, exact and scale-free (the c=1 orbit moment).
Rational orbit_haf_square_moment(const Graph& a, const ClickPattern& representative);

// Closed form for the complete graph with loops on `modes` vertices with
// uniform displacement d: z = d(1-cM), det(I-XC) = 1-c^2 M^2,
// val = sum_r s!/((s-2r)! r! 2^r) z^{s-2r} c^r with s = |n|, and
// p = prefactor * |O_n| * val^2 / n!. Valid for 0 < c < 1/M; M can be large.
double orbit_probability_complete_loops(int modes, double c, double d, const Orbit& o);

// Solves for the displacement that makes every component of
// z^T = d^T (I - cA [- cB]) equal to z_target. Exact rational solve; throws
// ValidityError with the rank when the system is singular.
RationalVector uniform_displacement(EncodingKind kind, const Graph& a, const Graph* b,
                                    const Rational& c, const Rational& z_target);

enum class CoarseKind { orbit, meta, total };

struct CoarseRow {
  std::string key;
  double probability = 0.0;
};

// A coarse-grained output distribution plus the encoding snapshot it was
// computed under. Keys: "(0,1,1,2)" for orbits, "|n|=6,Delta=2" for
// meta-orbits, "6" for totals.
struct CoarseDistribution {
  CoarseKind kind = CoarseKind::orbit;
  EncodingKind encoding = EncodingKind::pure;
  int modes = 0;
  double c = 0.0;
  std::vector<double> d;
  double det_sigma_q = 1.0;
  double prefactor = 1.0;
  std::vector<CoarseRow> rows;

  std::string to_csv() const;
  std::string to_json() const;
};

// p(|n|) for |n| = 0, 2, ..., max_total of a pure zero-displacement
// encoding: coefficient of w^|n| in prod_j (1 - c^2 lambda_j^2 w^2)^{-1/2},
// scaled by the prefactor.
CoarseDistribution total_photon_distribution(const GaussianEncoding& e, int max_total);

// One row per orbit with the given total and count bound.
CoarseDistribution orbit_distribution(const GaussianEncoding& e, int total, int max_count);

// Rows Delta_1 .. Delta_{n_max} at fixed total: orbits grouped by their
// attained maximum count. Zero rows are emitted.
CoarseDistribution meta_orbit_distribution(const GaussianEncoding& e, int total, int n_max);

enum class DistinguishStrategy { matching, gbs, gbs_collision, dgbs, meta };

struct DistinguishOptions {
  DistinguishStrategy strategy = DistinguishStrategy::matching;
  int n = 2;        // gbs_collision: tensor copies
  int max_r = -1;   // gbs_collision: highest r probed; -1 means floor(nM/2)
  int total = 6;    // meta
  int n_max = 3;    // meta
  double c = -1.0;  // meta; -1 picks 0.8 / max spectral norm
  double tol = 1e-9;
};

struct DistinguishReport {
  bool different = false;
  std::string detail;
};

// Pits an invariant against a graph pair: equal orders required. Exact
// comparison for the polynomial strategies, tolerance for meta.
DistinguishReport distinguish(const Graph& ga, const Graph& gb, const DistinguishOptions& opts);

}  // namespace gbsp

#endif  // GBSP_STATS_HPP
