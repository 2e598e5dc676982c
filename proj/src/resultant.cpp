#include "derinv/errors.hpp"
#include "derinv/kernels.hpp"
#include "derinv/poly.hpp"

namespace derinv {

namespace {

constexpr int kSylvesterMaxDegree = 8;

Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void require_nonzero(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("resultant of a zero polynomial");
}

// Res(c, g) = c^deg g and Res(f, c) = c^deg f for constants c.
bool constant_case(const IntPoly& f, const IntPoly& g, Integer& out) {
  if (f.degree() == 0) {
    out = pow(f.leading(), static_cast<unsigned long>(g.degree()));
    return true;
  }
  if (g.degree() == 0) {
    out = pow(g.leading(), static_cast<unsigned long>(f.degree()));
    return true;
  }
  return false;
}

}  // namespace

Integer resultant_sylvester(const IntPoly& f, const IntPoly& g) {
  require_nonzero(f, g);
  Integer out;
  if (constant_case(f, g, out)) return out;
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  kernels::IntMatrix s{m + n, std::vector<Integer>((m + n) * (m + n))};
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k <= m; ++k) s(row, row + k) = f.coeffs()[m - k];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t k = 0; k <= n; ++k) s(n + row, row + k) = g.coeffs()[n - k];
  }
  return kernels::serial::bareiss_determinant(std::move(s));
}

Integer resultant_subresultant(const IntPoly& f, const IntPoly& g) {
  require_nonzero(f, g);
  Integer out;
  if (constant_case(f, g, out)) return out;

  const Integer a = content(f);
  const Integer b = content(g);
  IntPoly A = primitive_part(f);
  IntPoly B = primitive_part(g);
  // primitive_part fixes the sign of the leading coefficient; put it back.
  if (f.leading() < 0) A = -A;
  if (g.leading() < 0) B = -B;
  Integer scale = pow(a, static_cast<unsigned long>(g.degree())) * pow(b, static_cast<unsigned long>(f.degree()));

  int sign = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) sign = -sign;
  }
  Integer gcoef = 1;
  Integer h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) sign = -sign;
    IntPoly R = pseudo_remainder(A, B);
    if (R.is_zero()) return 0;
    A = std::move(B);
    Integer divisor = gcoef * pow(h, static_cast<unsigned long>(delta));
    B = exact_divide(R, IntPoly::constant(divisor));
    gcoef = A.leading();
    if (delta > 0) {
      // h <- g^delta / h^(delta - 1)
      Integer num = pow(gcoef, static_cast<unsigned long>(delta));
      Integer den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.degree() == 0) {
      const unsigned long da = static_cast<unsigned long>(A.degree());
      Integer num = pow(B.leading(), da);
      Integer den = pow(h, da - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      Integer res = scale * h;
      return sign < 0 ? Integer(-res) : res;
    }
  }
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  require_nonzero(f, g);
  if (f.degree() <= kSylvesterMaxDegree && g.degree() <= kSylvesterMaxDegree) return resultant_sylvester(f, g);
  return resultant_subresultant(f, g);
}

Rational resultant(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("resultant of a zero polynomial");
  // f = cf * F with F primitive integer, so Res(f, g) = cf^deg g cg^deg f Res(F, G).
  const IntPoly F = f.primitive_integer();
  const IntPoly G = g.primitive_integer();
  const Rational cf = f.leading() / Rational(F.leading());
  const Rational cg = g.leading() / Rational(G.leading());
  Rational scale = 1;
  for (int i = 0; i < g.degree(); ++i) scale *= cf;
  for (int i = 0; i < f.degree(); ++i) scale *= cg;
  Rational out = scale * Rational(resultant(F, G));
  out.canonicalize();
  return out;
}

}  // namespace derinv
