#ifndef GBSP_POLYNOMIAL_HPP
#define GBSP_POLYNOMIAL_HPP

#include "gbsp/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gbsp {

// Dense univariate polynomial over the rationals. Canonical form: no
// trailing zero coefficients, so equality is coefficient-list equality.
// The zero polynomial has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(Rational(c)) {}
  UniPoly(const Rational& c) {
    if (sgn(c) != 0) c_.push_back(c);
  }

  static UniPoly variable() { return monomial(1, 1); }

  static UniPoly monomial(int degree, const Rational& c) {
    UniPoly p;
    if (sgn(c) != 0) {
      p.c_.assign(degree + 1, Rational(0));
      p.c_[degree] = c;
    }
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  Rational coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return Rational(0);
    return c_[d];
  }

  void set_coeff(int d, const Rational& v) {
    if (d < 0) throw std::invalid_argument("negative degree");
    if (d >= static_cast<int>(c_.size())) {
      if (sgn(v) == 0) return;
      c_.resize(d + 1, Rational(0));
    }
    c_[d] = v;
    trim();
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  UniPoly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend UniPoly operator*(const Rational& s, UniPoly p) { return p *= s; }
  friend UniPoly operator*(UniPoly p, const Rational& s) { return p *= s; }

  // Multiplication by t^k.
  UniPoly shifted(int k) const {
    if (is_zero() || k == 0) {
      UniPoly r = *this;
      return r;
    }
    UniPoly r;
    r.c_.assign(c_.size() + k, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

  Rational evaluate(const Rational& v) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
  }

  double evaluate_double(double v) const {
    double r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i].get_d();
    return r;
  }

  UniPoly derivative() const {
    UniPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    r.trim();
    return r;
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  const std::vector<Rational>& coefficients() const { return c_; }

 private:
  std::vector<Rational> c_;

  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
};

inline bool ring_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool ring_is_zero(double v) { return v == 0.0; }
inline bool ring_is_zero(const UniPoly& p) { return p.is_zero(); }

// Polynomials whose exponents all share the parity of `order` (matching and
// GBS-style polynomials) carry their sign structure implicitly: the term of
// degree order-2r flips by (-1)^r. This maps between the signless and signed
// forms; it is an involution.
inline UniPoly alternate_signs(const UniPoly& p, int order) {
  UniPoly r;
  for (int d = 0; d <= p.degree(); ++d) {
    Rational c = p.coeff(d);
    if (sgn(c) == 0) continue;
    int gap = order - d;
    if (gap < 0 || gap % 2 != 0)
      throw std::invalid_argument("exponent parity does not match order " + std::to_string(order));
    r.set_coeff(d, (gap / 2) % 2 == 0 ? c : Rational(-c));
  }
  return r;
}

// Sparse bivariate polynomial in (x, z) over the rationals, keyed by
// (deg_x, deg_z) in a sorted map so iteration order is deterministic.
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Rational>;

  BiPoly() = default;
  BiPoly(int c) : BiPoly(Rational(c)) {}
  BiPoly(const Rational& c) {
    if (sgn(c) != 0) m_[{0, 0}] = c;
  }

  static BiPoly monomial(int dx, int dz, const Rational& c) {
    BiPoly p;
    if (sgn(c) != 0) p.m_[{dx, dz}] = c;
    return p;
  }

  // Embeds a univariate polynomial in z, then multiplies by x^dx.
  static BiPoly from_z_poly(const UniPoly& p, int dx = 0) {
    BiPoly r;
    for (int d = 0; d <= p.degree(); ++d) {
      Rational c = p.coeff(d);
      if (sgn(c) != 0) r.m_[{dx, d}] = c;
    }
    return r;
  }

  static BiPoly from_x_poly(const UniPoly& p) {
    BiPoly r;
    for (int d = 0; d <= p.degree(); ++d) {
      Rational c = p.coeff(d);
      if (sgn(c) != 0) r.m_[{d, 0}] = c;
    }
    return r;
  }

  bool is_zero() const { return m_.empty(); }

  Rational coeff(int dx, int dz) const {
    auto it = m_.find({dx, dz});
    return it == m_.end() ? Rational(0) : it->second;
  }

  // Coefficient of x^dx, as a polynomial in z.
  UniPoly coeff_of_x(int dx) const {
    UniPoly r;
    for (const auto& [k, v] : m_)
      if (k.first == dx) r.set_coeff(k.second, v);
    return r;
  }

  // Setting z := 0 leaves a polynomial in x.
  UniPoly at_z_zero() const {
    UniPoly r;
    for (const auto& [k, v] : m_)
      if (k.second == 0) r.set_coeff(k.first, v);
    return r;
  }

  int max_x_degree() const {
    int d = -1;
    for (const auto& [k, v] : m_) d = std::max(d, k.first);
    return d;
  }

  int max_z_degree() const {
    int d = -1;
    for (const auto& [k, v] : m_) d = std::max(d, k.second);
    return d;
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [k, v] : o.m_) {
      auto it = m_.find(k);
      if (it == m_.end()) {
        m_[k] = v;
      } else {
        it->second += v;
        if (sgn(it->second) == 0) m_.erase(it);
      }
    }
    return *this;
  }

  BiPoly& operator-=(const BiPoly& o) { return *this += -o; }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& [k, v] : r.m_) v = -v;
    return r;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, va] : a.m_)
      for (const auto& [kb, vb] : b.m_) {
        Key k{ka.first + kb.first, ka.second + kb.second};
        auto it = r.m_.find(k);
        if (it == r.m_.end()) {
          Rational prod = va * vb;
          if (sgn(prod) != 0) r.m_[k] = prod;
        } else {
          it->second += va * vb;
          if (sgn(it->second) == 0) r.m_.erase(it);
        }
      }
    return r;
  }

  BiPoly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      m_.clear();
      return *this;
    }
    for (auto& [k, v] : m_) v *= s;
    return *this;
  }

  friend BiPoly operator*(const Rational& s, BiPoly p) { return p *= s; }

  Rational evaluate(const Rational& x, const Rational& z) const {
    Rational r = 0;
    for (const auto& [k, v] : m_)
      r += v * pow_rational(x, k.first) * pow_rational(z, k.second);
    return r;
  }

  double evaluate_double(double x, double z) const {
    double r = 0;
    for (const auto& [k, v] : m_)
      r += v.get_d() * std::pow(x, k.first) * std::pow(z, k.second);
    return r;
  }

  bool operator==(const BiPoly& o) const { return m_ == o.m_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  const Map& terms() const { return m_; }

 private:
  Map m_;
};

// Text form: descending degree, explicit signs, '*' between coefficient and
// power, e.g. "x^10 - 20*x^8 + 130*x^6 - 312*x^4 + 229*x^2 - 24". The parser
// accepts the same grammar (and tolerates arbitrary whitespace).
std::string render(const UniPoly& p, const std::string& var);
UniPoly parse_unipoly(const std::string& text, const std::string& var);

// Bivariate text form: x-major descending, z descending within, monomials
// like "32*x^3*z^2".
std::string render(const BiPoly& p);
BiPoly parse_bipoly(const std::string& text);

// JSON form {"order": M, "coeffs": {"(dx,dz)": "p/q", ...}}.
std::string bipoly_to_json(const BiPoly& p, int order);
BiPoly bipoly_from_json(const std::string& text, int* order = nullptr);

}  // namespace gbsp

namespace Eigen {

// UniPoly entries make matrices over R[x] (prisms, loss extensions) ordinary
// dense Eigen objects.
template <>
struct NumTraits<gbsp::UniPoly> : GenericNumTraits<gbsp::UniPoly> {
  typedef gbsp::UniPoly Real;
  typedef gbsp::UniPoly NonInteger;
  typedef gbsp::UniPoly Nested;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 400,
    MulCost = 800
  };
};

}  // namespace Eigen

#endif  // GBSP_POLYNOMIAL_HPP
