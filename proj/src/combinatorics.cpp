#include "gbsp/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gbsp {

int pattern_total(const ClickPattern& p) {
  int t = 0;
  for (int v : p) {
    if (v < 0) throw std::invalid_argument("click counts must be nonnegative");
    t += v;
  }
  return t;
}

int pattern_max(const ClickPattern& p) {
  int m = 0;
  for (int v : p) m = std::max(m, v);
  return m;
}

Int pattern_factorial(const ClickPattern& p) {
  Int f = 1;
  for (int v : p) {
    if (v < 0) throw std::invalid_argument("click counts must be nonnegative");
    f *= factorial(v);
  }
  return f;
}

std::vector<int> multiplicity_vector(const ClickPattern& p) {
  std::vector<int> k(pattern_max(p) + 1, 0);
  for (int v : p) ++k[v];
  return k;
}

Int orbit_size(const ClickPattern& p) {
  Int denom = 1;
  for (int kj : multiplicity_vector(p)) denom *= factorial(kj);
  return factorial(static_cast<int>(p.size())) / denom;
}

ClickPattern decollision(const ClickPattern& p, int n_max) {
  int top = pattern_max(p);
  if (top == 0) throw std::invalid_argument("decollision needs a nonzero pattern");
  if (n_max < 0) n_max = top;
  if (n_max < top) throw std::invalid_argument("block height below the largest count");
  ClickPattern out;
  out.reserve(p.size() * n_max);
  for (int v : p) {
    for (int t = 0; t < n_max - v; ++t) out.push_back(0);
    for (int t = 0; t < v; ++t) out.push_back(1);
  }
  return out;
}

namespace {

ClickPattern pattern_from_multiplicities(const std::vector<int>& k) {
  ClickPattern p;
  for (std::size_t v = 0; v < k.size(); ++v)
    for (int t = 0; t < k[v]; ++t) p.push_back(static_cast<int>(v));
  return p;
}

// Chooses k_a, k_{a-1}, ..., k_2 in ascending lexicographic order; k_1 and
// k_0 are whatever photons and modes remain.
void emit_orbits(int a, int j, int modes_left, int photons_left, std::vector<int>& k,
                 std::vector<Orbit>& out) {
  if (j == 1) {
    int k1 = photons_left;
    int k0 = modes_left - k1;
    if (k1 < 0 || k0 < 0) return;
    k[1] = k1;
    k[0] = k0;
    ClickPattern rep = pattern_from_multiplicities(k);
    Int denom = 1;
    for (int kj : k) denom *= factorial(kj);
    Int size = factorial(static_cast<int>(rep.size())) / denom;
    out.push_back({std::move(rep), std::move(size)});
    return;
  }
  int lo = (j == a) ? 1 : 0;
  for (int kj = lo; kj <= modes_left && kj * j <= photons_left; ++kj) {
    k[j] = kj;
    emit_orbits(a, j - 1, modes_left - kj, photons_left - kj * j, k, out);
  }
  k[j] = 0;
}

}  // namespace

std::vector<Orbit> enumerate_orbits(int modes, int total, int max_count) {
  if (modes < 1) throw std::invalid_argument("need at least one mode");
  if (total < 0) throw std::invalid_argument("total must be nonnegative");
  if (max_count < 1) throw std::invalid_argument("max count must be positive");
  std::vector<Orbit> out;
  if (total == 0) {
    out.push_back({ClickPattern(modes, 0), 1});
    return out;
  }
  for (int a = 1; a <= max_count; ++a) {
    std::vector<int> k(a + 1, 0);
    if (a == 1) {
      if (total <= modes) {
        k[1] = total;
        k[0] = modes - total;
        ClickPattern rep = pattern_from_multiplicities(k);
        Int size = factorial(modes) / (factorial(k[0]) * factorial(k[1]));
        out.push_back({std::move(rep), size});
      }
      continue;
    }
    emit_orbits(a, a, modes, total, k, out);
  }
  return out;
}

std::vector<ClickPattern> orbit_members(const ClickPattern& p) {
  ClickPattern rep = p;
  std::sort(rep.begin(), rep.end());
  std::vector<ClickPattern> out;
  do {
    out.push_back(rep);
  } while (std::next_permutation(rep.begin(), rep.end()));
  return out;
}

Int combinatorial_weight(const ClickPattern& p, int n) {
  if (pattern_max(p) > n)
    throw std::invalid_argument("a click count exceeds the photon bound " + std::to_string(n));
  Int w = 1;
  for (int v : p) w *= binomial(n, v);
  return w;
}

CountIdentity verify_count_identity(int modes, int n, int r) {
  if (n < 1) throw std::invalid_argument("need n >= 1 photons per mode");
  if (r < 0 || 2 * r > n * modes) throw std::invalid_argument("need 0 <= 2r <= n*modes");
  CountIdentity out;
  out.lhs = 0;
  for (const Orbit& o : enumerate_orbits(modes, 2 * r, n))
    out.lhs += o.size * combinatorial_weight(o.representative, n);
  out.rhs = binomial(n * modes, 2 * r);
  out.ok = (out.lhs == out.rhs);
  return out;
}

Int partition_count(int total) {
  if (total < 0) throw std::invalid_argument("total must be nonnegative");
  std::vector<Int> coeff(total + 1, 0);
  coeff[0] = 1;
  for (int part = 1; part <= total; ++part)
    for (int t = part; t <= total; ++t) coeff[t] += coeff[t - part];
  return coeff[total];
}

Int restricted_partition_count(int modes, int max_count, int total) {
  if (modes < 0 || max_count < 0 || total < 0)
    throw std::invalid_argument("arguments must be nonnegative");
  // Gaussian binomial (modes+max_count choose modes) as a truncated exact
  // series: multiply by (1-x^{max_count+i}), then expand 1/(1-x^i) as a
  // running prefix sum, for i = 1..modes. Every partial product is a
  // polynomial with integer coefficients, so truncation at `total` is exact.
  std::vector<Int> coeff(total + 1, 0);
  coeff[0] = 1;
  for (int i = 1; i <= modes; ++i) {
    int drop = max_count + i;
    for (int t = total; t >= drop; --t) coeff[t] -= coeff[t - drop];
    for (int t = i; t <= total; ++t) coeff[t] += coeff[t - i];
  }
  return coeff[total];
}

Int meta_orbit_count(int modes, const MetaOrbitKey& key) {
  if (key.max_count < 1 || key.max_count > key.total)
    throw std::invalid_argument("need 1 <= max_count <= total");
  return restricted_partition_count(modes, key.max_count, key.total) -
         restricted_partition_count(modes, key.max_count - 1, key.total);
}

KnapsackSolution max_orbit_knapsack(int modes, int total, int m, const std::vector<int>& caps) {
  if (modes < 1) throw std::invalid_argument("need at least one mode");
  if (total < 0) throw std::invalid_argument("total must be nonnegative");
  if (m < 1) throw std::invalid_argument("need at least one positive count value");
  std::vector<int> cap(m + 1, modes);
  if (!caps.empty()) {
    if (static_cast<int>(caps.size()) != m + 1)
      throw std::invalid_argument("caps must list k_0 .. k_m bounds");
    cap = caps;
  }

  // best[j][modes_left][photons_left]: minimal product of factorials over
  // k_j..k_m; empty optional marks infeasible states.
  std::vector<std::vector<std::vector<std::optional<Int>>>> best(
      m + 2, std::vector<std::vector<std::optional<Int>>>(
                 modes + 1, std::vector<std::optional<Int>>(total + 1)));
  best[m + 1][0][0] = Int(1);
  for (int j = m; j >= 0; --j)
    for (int left = 0; left <= modes; ++left)
      for (int ph = 0; ph <= total; ++ph) {
        std::optional<Int> b;
        for (int kj = 0; kj <= std::min(cap[j], left); ++kj) {
          if (kj * j > ph) break;
          const auto& rest = best[j + 1][left - kj][ph - kj * j];
          if (!rest) continue;
          Int cost = factorial(kj) * *rest;
          if (!b || cost < *b) b = cost;
        }
        best[j][left][ph] = b;
      }

  const auto& opt = best[0][modes][total];
  if (!opt)
    throw std::invalid_argument("no multiplicity vector reaches that total under the caps");

  KnapsackSolution out;
  out.multiplicities.assign(m + 1, 0);
  out.factorial_product = *opt;
  int left = modes, ph = total;
  for (int j = 0; j <= m; ++j) {
    for (int kj = 0; kj <= std::min(cap[j], left); ++kj) {
      if (kj * j > ph) break;
      const auto& rest = best[j + 1][left - kj][ph - kj * j];
      if (!rest) continue;
      if (factorial(kj) * *rest == *best[j][left][ph]) {
        out.multiplicities[j] = kj;
        left -= kj;
        ph -= kj * j;
        break;
      }
    }
  }
  out.log_cost = 0.0;
  for (int kj : out.multiplicities)
    for (int t = 2; t <= kj; ++t) out.log_cost += std::log(static_cast<double>(t));
  return out;
}

}  // namespace gbsp
