#pragma once

// Slow, independent reference computations used only by the tests.

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "derinv/ffield.hpp"
#include "derinv/poly.hpp"

namespace oracle {

using derinv::FpPoly;
using derinv::FqElem;
using derinv::FieldRef;
using derinv::Integer;
using derinv::IntPoly;
using derinv::Rational;

// Determinant by plain Gaussian elimination over Q.
inline Rational rational_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m[r][c] == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(m[r], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

// Sylvester matrix determinant, f rows first.
inline Integer resultant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree(), n = g.degree();
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, 0));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
  }
  const Rational d = rational_det(std::move(s));
  return d.get_num();
}

// (-1)^(n(n-1)/2) (-1)^(n-1) n^n
inline Integer disc_x_pow_minus_one(unsigned n) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), n, n);
  const bool neg = ((n * (n - 1) / 2) + (n - 1)) % 2 == 1;
  return neg ? Integer(-v) : v;
}

using Complex = std::complex<long double>;

// Durand-Kerner iteration for all complex roots of a polynomial with
// rational coefficients.
inline std::vector<Complex> numeric_roots(const std::vector<long double>& ascending) {
  const int d = static_cast<int>(ascending.size()) - 1;
  std::vector<Complex> c(ascending.size());
  for (int i = 0; i <= d; ++i) c[i] = ascending[i] / ascending[d];
  auto eval = [&](Complex z) {
    Complex acc = 0;
    for (int i = d; i >= 0; --i) acc = acc * z + c[i];
    return acc;
  };
  std::vector<Complex> z(d);
  const Complex seed(0.4L, 0.9L);
  for (int i = 0; i < d; ++i) z[i] = std::pow(seed, i);
  for (int iter = 0; iter < 2000; ++iter) {
    long double moved = 0;
    for (int i = 0; i < d; ++i) {
      Complex denom = 1;
      for (int j = 0; j < d; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const Complex step = eval(z[i]) / denom;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-16L) break;
  }
  return z;
}

inline std::vector<long double> to_long_double(const derinv::RatPoly& p) {
  std::vector<long double> out;
  for (const auto& c : p.coeffs()) out.push_back(static_cast<long double>(c.get_d()));
  return out;
}

// Least m with t^m = 1 mod f, by stepping t^m one power at a time.
inline std::optional<std::uint64_t> brute_period(const FpPoly& f, std::uint64_t limit) {
  const FpPoly fm = f.monic();
  const FpPoly t = FpPoly::monomial(f.p(), 1, 1) % fm;
  const FpPoly one = FpPoly::constant(f.p(), 1) % fm;
  FpPoly power = t;
  for (std::uint64_t m = 1; m <= limit; ++m) {
    if (power == one) return m;
    power = (power * t) % fm;
  }
  return std::nullopt;
}

// Every element of a small field, in digit order.
inline std::vector<FqElem> all_elements(const FieldRef& F) {
  std::vector<FqElem> out;
  std::vector<std::uint32_t> digits(F->k(), 0);
  while (true) {
    out.emplace_back(F, FpPoly(F->p(), digits));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == F->p()) digits[i++] = 0;
    if (i == digits.size()) return out;
  }
}

inline FqElem eval(const FpPoly& f, const FqElem& x) {
  FqElem acc = FqElem::zero(x.field());
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + FqElem::from_int(x.field(), f.coeffs()[i]);
  return acc;
}

inline std::vector<FqElem> exhaustive_roots(const FpPoly& f, const FieldRef& F) {
  std::vector<FqElem> out;
  for (const auto& x : all_elements(F)) {
    if (eval(f, x).is_zero()) out.push_back(x);
  }
  return out;
}

inline FpPoly random_fp_poly(std::uint32_t p, int degree, std::mt19937_64& rng, bool nonzero_constant) {
  std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
  std::vector<std::uint32_t> c(degree + 1);
  for (auto& x : c) x = digit(rng);
  c[degree] = 1 + digit(rng) % (p - 1);
  if (nonzero_constant && c[0] == 0) c[0] = 1;
  return FpPoly(p, c);
}

inline IntPoly random_int_poly(int degree, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(degree + 1);
  for (auto& x : c) x = coef(rng);
  if (c[degree] == 0) c[degree] = 1;
  return IntPoly(c);
}

}  // namespace oracle
