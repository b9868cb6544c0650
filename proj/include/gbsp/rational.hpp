#ifndef GBSP_RATIONAL_HPP
#define GBSP_RATIONAL_HPP

#include <Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

// mpq_class as an Eigen scalar: exact arithmetic, so epsilon and
// dummy_precision are genuinely zero.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace gbsp {

using Rational = mpq_class;
using Int = mpz_class;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Accepts "p/q" or an integer literal, with optional sign. The result is
// always canonical: reduced, denominator positive. Zero denominators are
// rejected rather than canonicalized.
inline Rational parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

// Canonical text form: "n" when integral, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Int factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// (k-1)!! = 1*3*...*(k-1), the number of perfect matchings of K_k (k even).
inline Int double_factorial_below(unsigned long k) {
  Int r = 1;
  for (unsigned long i = 1; i + 1 <= k; i += 2) r *= i;
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rational pow_rational(const Rational& base, unsigned e) {
  Rational r = 1;
  Rational b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

inline Rational rational_from_int(const Int& n) { return Rational(n); }

}  // namespace gbsp

#endif  // GBSP_RATIONAL_HPP
