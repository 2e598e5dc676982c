#include "derinv/invariants.hpp"

#include <algorithm>

#include "derinv/errors.hpp"
#include "derinv/ffield.hpp"
#include "derinv/kernels.hpp"

namespace derinv {

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

kernels::IntMatrix wendt_matrix(unsigned n) {
  kernels::IntMatrix c{n, std::vector<Integer>(static_cast<std::size_t>(n) * n)};
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) c(i, j) = binomial(n, (j + n - i) % n);
  }
  return c;
}

Integer to_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw InternalError(std::string(what) + " is not an integer");
  return q.get_num();
}

Rational rpow(const Rational& b, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

}  // namespace

Integer rho(unsigned n) {
  if (n == 0) throw InvalidArgument("rho needs n >= 1");
  IntPoly f = IntPoly::x_pow_minus_one(n);
  IntPoly g = shift(f, 1);
  if (n % 6 == 0) {
    const IntPoly phi3 = cyclotomic(3);
    f = exact_divide(f, phi3);
    g = exact_divide(g, phi3);
  }
  Integer r = resultant(f, g);
  if (r == 0) throw InternalError("rho vanished");
  return r;
}

Integer wendt(unsigned n) {
  if (n == 0) throw InvalidArgument("wendt needs n >= 1");
  return kernels::serial::bareiss_determinant(wendt_matrix(n));
}

Integer wendt_parallel(unsigned n) {
  if (n == 0) throw InvalidArgument("wendt needs n >= 1");
  return kernels::omp::bareiss_determinant(wendt_matrix(n));
}

Integer delta(const IntPoly& r) {
  if (r.is_zero()) throw InvalidArgument("delta of the zero polynomial");
  const int d = r.degree();
  if (d == 0) return r.leading();
  const auto parts = squarefree_decomposition(r);
  unsigned m = 0;
  IntPoly g = IntPoly::constant(1);
  for (const auto& part : parts) {
    m = std::max(m, part.multiplicity);
    g = g * part.factor;
  }
  const int ell = g.degree();
  // prod_{i<j} (l_i - l_j)^2 = disc(g) / lc(g)^(2l - 2)
  Rational root_product = 1;
  if (ell >= 2) {
    root_product = Rational(discriminant(g)) / rpow(Rational(g.leading()), 2UL * ell - 2);
  }
  Integer factorial;
  mpz_fac_ui(factorial.get_mpz_t(), m - 1);
  Integer a_pow;
  mpz_pow_ui(a_pow.get_mpz_t(), r.leading().get_mpz_t(), 1UL + 2UL * d * d);
  const Rational value = Rational(a_pow * factorial) * rpow(root_product, m);
  const Integer out = to_integer(value, "delta");
  if (out == 0) throw InternalError("delta vanished");
  return out;
}

Integer sigma(const IntPoly& r) {
  if (r.is_zero()) throw InvalidArgument("sigma of the zero polynomial");
  const int d = r.degree();
  if (d == 0) return 1;
  const IntPoly g = radical(r);
  const RatPoly sums = composed_sum(RatPoly(g).monic());
  // Drop every pairwise sum that is itself a root of r.
  IntPoly kept = sums.primitive_integer();
  for (IntPoly common = gcd_rational(kept, g); common.degree() > 0; common = gcd_rational(kept, g)) {
    kept = exact_divide(kept, common);
  }
  // prod_{kept(mu)=0} r(mu) = Res(kept, r) / lc(kept)^d
  const Rational product = Rational(resultant(kept, r)) / rpow(Rational(kept.leading()), static_cast<unsigned long>(d));
  Integer a_pow;
  mpz_pow_ui(a_pow.get_mpz_t(), r.leading().get_mpz_t(), 2UL * d * d * d);
  const Integer out = to_integer(Rational(a_pow) * product, "sigma");
  if (out == 0) throw InternalError("sigma vanished");
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

Integer cyclo_resultant(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw InvalidArgument("cyclotomic indices must be positive");
  if (m > n) throw InvalidArgument("cyclo_resultant needs m <= n");
  if (m == n) return 0;
  if (n % m != 0) return 1;
  unsigned k = n / m;
  unsigned q = 2;
  while (k % q != 0) ++q;
  while (k % q == 0) k /= q;
  if (k != 1) return 1;
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), q, euler_phi(m));
  return out;
}

Integer cyclo_resultant_direct(unsigned m, unsigned n) { return resultant(cyclotomic(m), cyclotomic(n)); }

Theorem36Verdict theorem36_bound(unsigned n, std::uint32_t p) {
  if (n == 0) throw InvalidArgument("theorem36_bound needs n >= 1");
  if (p != 0 && !is_prime_u64(p)) throw InvalidArgument("characteristic must be 0 or a prime");
  if (p == 0) return n % 6 == 0 ? Theorem36Verdict::ClassAtMost2 : Theorem36Verdict::Abelian;
  // Both factors are monic over Z, so p | rho_n iff their reductions share a
  // factor over F_p. Avoids the full resultant for large n.
  FpPoly f = FpPoly::x_pow_minus_one(p, n);
  FpPoly g = shift(f, 1);
  if (n % 6 == 0) {
    const FpPoly phi3(p, {1, 1, 1});
    f = f / phi3;
    g = g / phi3;
  }
  if (gcd(f, g).degree() > 0) return Theorem36Verdict::NoConclusion;
  return n % 6 == 0 ? Theorem36Verdict::ClassAtMost2 : Theorem36Verdict::Abelian;
}

Theorem36Verdict theorem36_bound(unsigned n, std::uint32_t p, const Integer& rho_n) {
  if (p != 0 && !is_prime_u64(p)) throw InvalidArgument("characteristic must be 0 or a prime");
  // rho_n != 0, so in characteristic zero p never divides it.
  if (p != 0 && mpz_divisible_ui_p(rho_n.get_mpz_t(), p)) return Theorem36Verdict::NoConclusion;
  return n % 6 == 0 ? Theorem36Verdict::ClassAtMost2 : Theorem36Verdict::Abelian;
}

std::string to_string(Theorem36Verdict v) {
  switch (v) {
    case Theorem36Verdict::Abelian: return "Abelian";
    case Theorem36Verdict::ClassAtMost2: return "ClassAtMost2";
    case Theorem36Verdict::NoConclusion: return "NoConclusion";
  }
  return "NoConclusion";
}

}  // namespace derinv
