#include "gbsp/hafnian.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace gbsp;

namespace {

RationalMatrix ones_offdiag(int n) {
  RationalMatrix w = RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) w(i, j) = 1;
  return w;
}

RationalMatrix random_symmetric(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  RationalMatrix w = RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      w(i, j) = v;
      w(j, i) = v;
    }
  return w;
}

}  // namespace

TEST_CASE("hafnian base cases") {
  RationalMatrix empty = RationalMatrix::Zero(0, 0);
  RationalMatrix zero3 = RationalMatrix::Zero(3, 3);
  CHECK(hafnian_plain(empty) == 1);
  CHECK(hafnian_plain(zero3) == 0);
  CHECK(hafnian_memoized(empty) == 1);
  CHECK(hafnian_memoized(ones_offdiag(5)) == 0);

  RationalMatrix edge(2, 2);
  edge << 0, Rational(5, 3), Rational(5, 3), 0;
  CHECK(hafnian_plain(edge) == Rational(5, 3));
}

TEST_CASE("hafnian counts perfect matchings of complete graphs") {
  // (n-1)!! pairings: 3 on four vertices, 15 on six.
  CHECK(hafnian_plain(ones_offdiag(4)) == 3);
  CHECK(hafnian_plain(ones_offdiag(6)) == 15);
  CHECK(hafnian_memoized(ones_offdiag(8)) == 105);
}

TEST_CASE("diagonal entries are never read") {
  RationalMatrix w = ones_offdiag(4);
  RationalMatrix loops = w;
  for (int i = 0; i < 4; ++i) loops(i, i) = Rational(99, 7);
  CHECK(hafnian_plain(loops) == hafnian_plain(w));
  CHECK(hafnian_memoized(loops) == hafnian_memoized(w));
}

TEST_CASE("hafnian strategies agree with the pairing oracle") {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 * (1 + trial % 5);  // 2..10
    RationalMatrix w = random_symmetric(rng, n);
    Rational expected = oracle::hafnian(w);
    CHECK(hafnian_plain(w) == expected);
    CHECK(hafnian_memoized(w) == expected);
    CHECK(hafnian(w) == expected);
    auto table = hafnian_all_even_subsets(w);
    CHECK(table[(std::uint64_t(1) << n) - 1] == expected);
  }
}

TEST_CASE("subset hafnians match induced submatrices") {
  std::mt19937 rng(7);
  RationalMatrix w = random_symmetric(rng, 6);
  std::vector<int> live{0, 2, 3, 5};
  RationalMatrix sub(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) sub(i, j) = w(live[i], live[j]);
  CHECK(hafnian_on_subset(w, live) == hafnian_plain(sub));

  auto table = hafnian_all_even_subsets(w);
  std::uint64_t mask = 0b101101;  // {0, 2, 3, 5}
  CHECK(table[mask] == hafnian_plain(sub));
  CHECK(table[0b000111] == 0);  // odd cardinality
  CHECK(table[0] == 1);
}

TEST_CASE("hafnian over polynomial entries") {
  using PolyMatrix = DenseMatrix<UniPoly>;
  UniPoly x = UniPoly::variable();
  PolyMatrix w(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w(i, j) = UniPoly();
  w(0, 1) = w(1, 0) = x;
  w(2, 3) = w(3, 2) = x;
  w(0, 2) = w(2, 0) = UniPoly(1);
  w(1, 3) = w(3, 1) = UniPoly(1);
  // Pairings: {01,23} -> x^2, {02,13} -> 1, {03,12} -> 0.
  UniPoly h = hafnian_plain(w);
  CHECK(h == x * x + UniPoly(1));
  CHECK(hafnian_memoized(w) == h);
}

TEST_CASE("order caps and work budget") {
  RationalMatrix big27 = RationalMatrix::Zero(27, 27);
  RationalMatrix big25 = RationalMatrix::Zero(25, 25);
  CHECK_THROWS_AS(hafnian_memoized(big27), SizeError);
  CHECK_THROWS_AS(hafnian_all_even_subsets(big25), SizeError);

  WorkBudget tiny(1);
  CHECK_THROWS_AS(hafnian_memoized(ones_offdiag(8), &tiny), SizeError);

  WorkBudget roomy(1 << 20);
  CHECK(hafnian_memoized(ones_offdiag(8), &roomy) == 105);
  CHECK(roomy.used() > 0);
}

TEST_CASE("asymmetric input is rejected") {
  RationalMatrix w = RationalMatrix::Zero(2, 2);
  w(0, 1) = 1;
  CHECK_THROWS_AS(hafnian_plain(w), std::invalid_argument);
  CHECK_THROWS_AS(hafnian_memoized(w), std::invalid_argument);
}

TEST_CASE("fixed-size subset enumeration is lexicographic") {
  std::vector<int> c{0, 1};
  std::vector<std::vector<int>> seen{c};
  while (next_combination(c, 5)) seen.push_back(c);
  REQUIRE(seen.size() == 10);
  CHECK(seen[1] == std::vector<int>{0, 2});
  CHECK(seen[4] == std::vector<int>{1, 2});
  CHECK(seen.back() == std::vector<int>{3, 4});
}
