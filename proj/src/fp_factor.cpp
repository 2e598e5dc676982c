#include <algorithm>
#include <random>

#include "derinv/errors.hpp"
#include "derinv/factor.hpp"
#include "derinv/ffield.hpp"
#include "detail.hpp"

namespace derinv {

namespace {

// f' = 0 over F_p means f = g(t^p) = g(t)^p; return g.
FpPoly pth_root(const FpPoly& f) {
  const std::uint32_t p = f.p();
  std::vector<std::uint32_t> out(f.coeffs().size() / p + 1);
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out[i / p] = f.coeffs()[i];
  return FpPoly(p, std::move(out));
}

void squarefree_parts(const FpPoly& f, unsigned scale, std::vector<FpFactor>& out) {
  // Yun-style split with a p-th root step when the derivative vanishes.
  const FpPoly one = FpPoly::constant(f.p(), 1);
  FpPoly c = gcd(f, derivative(f));
  FpPoly w = f / c;
  for (unsigned i = 1; w != one; ++i) {
    const FpPoly y = gcd(w, c);
    const FpPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_parts(pth_root(c).monic(), scale * f.p(), out);
}

// Squarefree f -> (product of all degree-d irreducible factors, d).
std::vector<std::pair<FpPoly, unsigned>> distinct_degree(FpPoly f) {
  std::vector<std::pair<FpPoly, unsigned>> out;
  const std::uint32_t p = f.p();
  const FpPoly x = FpPoly::monomial(p, 1, 1);
  FpPoly h = x % f;
  for (unsigned d = 1; f.degree() >= 2 * static_cast<int>(d); ++d) {
    h = powmod(h, Integer(p), f);
    const FpPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

FpPoly random_poly(std::uint32_t p, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(below_degree));
  for (auto& x : c) x = digit(rng);
  return FpPoly(p, std::move(c));
}

// Cantor-Zassenhaus on a product of distinct degree-d irreducibles.
void equal_degree(const FpPoly& g, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g.monic());
    return;
  }
  const std::uint32_t p = g.p();
  Integer qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), p, d);
  while (true) {
    const FpPoly a = random_poly(p, g.degree(), rng);
    if (a.degree() < 1) continue;
    FpPoly w;
    if (p == 2) {
      // Trace map F_{2^d} -> F_2 applied to a.
      FpPoly y = a % g;
      w = y;
      for (unsigned i = 1; i < d; ++i) {
        y = (y * y) % g;
        w += y;
      }
    } else {
      w = powmod(a, (qd - 1) / 2, g) - FpPoly::constant(p, 1);
    }
    const FpPoly h = gcd(g, w);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FpFactor> fp_factor(const FpPoly& f) {
  if (f.degree() < 1) throw InvalidArgument("fp_factor needs a non-constant polynomial");
  std::mt19937_64 rng(detail::splitting_seed(f));
  std::vector<FpFactor> parts;
  squarefree_parts(f.monic(), 1, parts);
  std::vector<FpFactor> out;
  for (const auto& part : parts) {
    for (const auto& [block, d] : distinct_degree(part.factor)) {
      std::vector<FpPoly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& q : irreducibles) out.push_back({std::move(q), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor != b.factor) return canonical_less(a.factor, b.factor);
    return a.multiplicity < b.multiplicity;
  });
  // Parts of different multiplicity are coprime, so factors never repeat;
  // merge anyway to keep the output a proper multiset.
  std::vector<FpFactor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().factor == fac.factor) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  return merged;
}

Integer period(const FpPoly& f) {
  if (f.degree() < 1) throw InvalidArgument("period needs a non-constant polynomial");
  if (f.coeff(0) == 0) throw InvalidArgument("polynomial has no period since f(0) = 0");
  const std::uint32_t p = f.p();
  Integer order = 1;
  unsigned max_mult = 1;
  for (const auto& [q, mult] : fp_factor(f)) {
    const FieldRef residue = FqField::with_modulus(q);
    const Integer e = element_order(FqElem::generator(residue));
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), e.get_mpz_t());
    max_mult = std::max(max_mult, mult);
  }
  // Smallest p^b >= max multiplicity.
  Integer pb = 1;
  while (pb < max_mult) pb *= p;
  const Integer per = order * pb;

  const FpPoly fm = f.monic();
  const FpPoly x = FpPoly::monomial(p, 1, 1);
  const FpPoly one = FpPoly::constant(p, 1) % fm;
  if (powmod(x, per, fm) != one) throw InternalError("period does not satisfy f | t^per - 1");
  for (const auto& [ell, unused] : factor_int(per).factors) {
    if (powmod(x, per / ell, fm) == one) throw InternalError("period is not minimal");
  }
  return per;
}

}  // namespace derinv
