#include <doctest.h>

#include <cmath>

#include "derinv/errors.hpp"
#include "derinv/invariants.hpp"
#include "oracles.hpp"

using namespace derinv;

namespace {

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// prod over roots z of t^n - 1 of ((z+1)^n - 1), in floating point.
long double numeric_rho(unsigned n) {
  std::complex<long double> acc = 1;
  const long double pi = std::acos(-1.0L);
  for (unsigned k = 0; k < n; ++k) {
    const std::complex<long double> z = std::polar(1.0L, 2 * pi * k / n);
    acc *= std::pow(z + 1.0L, static_cast<int>(n)) - 1.0L;
  }
  return acc.real();
}

}  // namespace

TEST_CASE("rho examples") {
  CHECK(rho(3) == 28);
  CHECK(rho(5) == 3751);
  CHECK(rho(6) == -4116);
  CHECK(rho(11) == Integer("101832157445630503"));
  CHECK_THROWS_AS(rho(0), InvalidArgument);
}

TEST_CASE("rho against a floating point product over roots of unity") {
  for (unsigned n = 1; n <= 10; ++n) {
    if (n % 6 == 0) continue;
    const long double approx = numeric_rho(n);
    CHECK(std::fabs(approx - rho(n).get_d()) <= 1e-6L * std::max(1.0L, std::fabs(approx)));
  }
}

TEST_CASE("wendt determinant") {
  CHECK(wendt(3) == 28);
  CHECK(wendt(6) == 0);
  CHECK(wendt(1) == 1);
  CHECK_THROWS_AS(wendt(0), InvalidArgument);
  for (unsigned n = 1; n <= 11; ++n) {
    if (n % 6 != 0) CHECK(wendt(n) == rho(n));
  }
  for (unsigned n = 1; n <= 24; ++n) {
    CHECK((wendt(n) == 0) == (n % 6 == 0));
    CHECK(wendt_parallel(n) == wendt(n));
  }
}

TEST_CASE("rho divisibility along divisors") {
  for (unsigned n = 1; n <= 24; ++n) {
    const Integer rn = rho(n);
    for (unsigned m = 1; m <= n; ++m) {
      if (n % m == 0) CHECK(rn % rho(m) == 0);
    }
  }
}

TEST_CASE("delta") {
  CHECK(delta(IntPoly{5}) == 5);
  CHECK(delta(IntPoly{-1, 0, 1}) == 4);
  CHECK(delta(IntPoly{1, -2, 1}) == 1);
  CHECK_THROWS_AS(delta(IntPoly{}), InvalidArgument);
  for (unsigned n = 1; n <= 10; ++n) CHECK(delta(IntPoly::x_pow_minus_one(n)) == oracle::disc_x_pow_minus_one(n));
}

TEST_CASE("delta with repeated roots and a non-monic leading coefficient") {
  // r = 2 (t-1)^2 (t+1): a = 2, d = 3, m = 2, roots 1, -1.
  // a^19 * 1! * ((1 - (-1))^2)^2 = 2^19 * 16
  const IntPoly r = IntPoly{2} * power(IntPoly{-1, 1}, 2) * IntPoly{1, 1};
  CHECK(delta(r) == ipow(2, 19) * 16);
  // (t-1)^3 (t-2): m = 3, a = 1; 2! * ((1-2)^2)^3 = 2
  CHECK(delta(power(IntPoly{-1, 1}, 3) * IntPoly{-2, 1}) == 2);
}

TEST_CASE("sigma") {
  CHECK(sigma(IntPoly{7}) == 1);
  CHECK(sigma(IntPoly{-1, 0, 1}) == 9);
  CHECK(sigma(IntPoly::x_pow_minus_one(6)) == ipow(12 * rho(6), 6));
  CHECK_THROWS_AS(sigma(IntPoly{}), InvalidArgument);
}

TEST_CASE("sigma against direct enumeration over numeric roots") {
  // Small integer-rooted polynomials: every pairwise sum is an integer.
  const std::vector<std::vector<long>> root_sets{{1, 2}, {1, 3, -2}, {0, 5}, {2, 2, 7}, {-1, 1, 4}};
  for (const auto& roots : root_sets) {
    IntPoly r{1};
    for (long x : roots) r = r * IntPoly{-x, 1};
    std::vector<long> distinct = roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Integer expected = 1;
    for (long a : distinct) {
      for (long b : distinct) {
        const Integer v = r.eval(a + b);
        if (v != 0) expected *= v;
      }
    }
    CHECK(sigma(r) == expected);
  }
}

TEST_CASE("delta and sigma never vanish") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 15; ++i) {
    const IntPoly r = oracle::random_int_poly(1 + i % 4, 5, rng);
    CHECK(delta(r) != 0);
    CHECK(sigma(r) != 0);
  }
}

TEST_CASE("cyclotomic resultants") {
  CHECK(cyclo_resultant(3, 6) == 4);
  CHECK(cyclo_resultant(3, 9) == 9);
  CHECK(cyclo_resultant(2, 3) == 1);
  CHECK_THROWS_AS(cyclo_resultant(5, 3), InvalidArgument);
  for (unsigned n = 1; n <= 18; ++n) {
    for (unsigned m = 1; m <= n; ++m) CHECK(abs(cyclo_resultant(m, n)) == abs(cyclo_resultant_direct(m, n)));
  }
  // Direct orientation gives +n^2/3; the closed-form product is unsigned.
  for (unsigned n : {6U, 12U, 18U}) {
    Integer direct = 1;
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d == 0 && d != 3) direct *= cyclo_resultant_direct(3, d);
    }
    CHECK(direct == n * n / 3);
  }
}

TEST_CASE("theorem36_bound") {
  CHECK(theorem36_bound(5, 7) == Theorem36Verdict::Abelian);
  CHECK(theorem36_bound(6, 5) == Theorem36Verdict::ClassAtMost2);
  CHECK(theorem36_bound(6, 3) == Theorem36Verdict::NoConclusion);
  CHECK(theorem36_bound(6, 0) == Theorem36Verdict::ClassAtMost2);
  CHECK(theorem36_bound(7, 0) == Theorem36Verdict::Abelian);
  CHECK_THROWS_AS(theorem36_bound(5, 4), InvalidArgument);
  for (unsigned n = 1; n <= 36; ++n) {
    for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U, 19U, 37U, 757U}) {
      const bool divides = rho(n) % p == 0;
      const auto v = theorem36_bound(n, p);
      CHECK((v == Theorem36Verdict::NoConclusion) == divides);
      if (!divides) CHECK((v == Theorem36Verdict::ClassAtMost2) == (n % 6 == 0));
    }
  }
}
