#include <doctest.h>

#include <atomic>
#include <random>
#include <stdexcept>

#include "derinv/kernels.hpp"
#include "oracles.hpp"

using namespace derinv;
using namespace derinv::kernels;

namespace {

IntMatrix random_matrix(std::size_t n, long range, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix m{n, std::vector<Integer>(n * n)};
  for (auto& x : m.a) x = d(rng);
  return m;
}

std::vector<std::vector<Rational>> as_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> r(m.n, std::vector<Rational>(m.n));
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) r[i][j] = m(i, j);
  }
  return r;
}

}  // namespace

TEST_CASE("Bareiss determinant matches rational elimination") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 0; n <= 9; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      IntMatrix m = random_matrix(n, trial == 0 ? 1 : 50, rng);
      if (trial == 3 && n >= 2) {
        for (std::size_t j = 0; j < n; ++j) m(1, j) = 3 * m(0, j);
      }
      const Rational expected = oracle::rational_det(as_rational(m));
      CHECK(Rational(serial::bareiss_determinant(m)) == expected);
      CHECK(Rational(omp::bareiss_determinant(m)) == expected);
    }
  }
}

TEST_CASE("Bareiss handles zero pivots") {
  IntMatrix m{3, {0, 1, 2, 1, 0, 3, 4, -3, 8}};
  CHECK(serial::bareiss_determinant(m) == -2);
  CHECK(omp::bareiss_determinant(m) == -2);
}

TEST_CASE("progression pair search returns the first accepted pair") {
  for (std::size_t count : {0UL, 1UL, 7UL, 40UL}) {
    for (std::size_t target = 0; target < count * count; target += 13) {
      const ProgressionTest test = [&](std::size_t i, std::size_t j) { return i * count + j >= target && (i + j) % 3 == 0; };
      const auto a = serial::find_progression_pair(count, test);
      const auto b = omp::find_progression_pair(count, test);
      CHECK(a == b);
      std::optional<IndexPair> brute;
      for (std::size_t i = 0; i < count && !brute; ++i) {
        for (std::size_t j = 0; j < count && !brute; ++j) {
          if (test(i, j)) brute = IndexPair{i, j};
        }
      }
      CHECK(a == brute);
    }
    const ProgressionTest never = [](std::size_t, std::size_t) { return false; };
    CHECK_FALSE(omp::find_progression_pair(count, never).has_value());
  }
}

TEST_CASE("for_each_row visits every index once") {
  for (std::size_t count : {0UL, 1UL, 100UL}) {
    std::vector<int> hits(count, 0);
    omp::for_each_row(count, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
    std::vector<std::size_t> order;
    serial::for_each_row(count, [&](std::size_t i) { order.push_back(i); });
    for (std::size_t i = 0; i < order.size(); ++i) CHECK(order[i] == i);
  }
}

TEST_CASE("exceptions thrown inside parallel kernels reach the caller") {
  CHECK_THROWS_AS(omp::for_each_row(10, [](std::size_t i) {
                    if (i == 7) throw std::domain_error("row 7");
                  }),
                  std::domain_error);
  const ProgressionTest bad = [](std::size_t i, std::size_t) -> bool {
    if (i == 2) throw std::domain_error("pair");
    return false;
  };
  CHECK_THROWS_AS(omp::find_progression_pair(5, bad), std::domain_error);
}
