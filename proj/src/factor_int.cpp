#include <algorithm>
#include <map>
#include <sstream>

#include "derinv/errors.hpp"
#include "derinv/factor.hpp"

namespace derinv {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin(const Integer& n, unsigned long base) {
  const Integer n1 = n - 1;
  Integer d = n1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  const Integer a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n1) return true;
  }
  return false;
}

Integer mod(const Integer& a, const Integer& n) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer half_mod(Integer a, const Integer& n) {
  if (mpz_odd_p(a.get_mpz_t())) a += n;
  mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), 1);
  return a;
}

// Strong Lucas probable prime test with Selfridge parameters.
bool strong_lucas(const Integer& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  long D = 5;
  while (true) {
    const Integer d = D;
    const int j = mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(d) != n) return false;
    D = D > 0 ? -(D + 2) : -(D - 2);
  }
  const Integer P = 1;
  const Integer Q = (1 - D) / 4;
  const Integer Dz = D;
  Integer dd = n + 1;
  const unsigned long s = mpz_scan1(dd.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(dd.get_mpz_t(), dd.get_mpz_t(), s);

  Integer U = 1, V = P, Qk = mod(Q, n);
  const std::size_t bits = mpz_sizeinbase(dd.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    U = mod(U * V, n);
    V = mod(V * V - 2 * Qk, n);
    Qk = mod(Qk * Qk, n);
    if (mpz_tstbit(dd.get_mpz_t(), i)) {
      Integer nu = half_mod(mod(P * U + V, n), n);
      Integer nv = half_mod(mod(Dz * U + P * V, n), n);
      U = std::move(nu);
      V = std::move(nv);
      Qk = mod(Qk * Q, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = mod(V * V - 2 * Qk, n);
    if (V == 0) return true;
    Qk = mod(Qk * Qk, n);
  }
  return false;
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out, unsigned long seed) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  const Integer d = pollard_brent(n, seed);
  factor_into(d, out, seed + 1);
  factor_into(n / d, out, seed + 1);
}

}  // namespace

Integer Factorization::value() const {
  Integer v = sign;
  for (const auto& [prime, e] : factors) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), prime.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  static const Integer kDeterministicBound("3317044064679887385961981");
  for (unsigned long q : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL, 41UL}) {
    if (n == q) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
  }
  if (n < kDeterministicBound) {
    for (unsigned long a : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL, 41UL}) {
      if (!miller_rabin(n, a)) return false;
    }
    return true;
  }
  return miller_rabin(n, 2) && strong_lucas(n);
}

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (n < 4 || mpz_even_p(n.get_mpz_t())) {
    if (n >= 4) return 2;
    throw InvalidArgument("pollard_brent needs a composite argument");
  }
  constexpr unsigned long kBatch = 128;
  for (unsigned long c = seed; ; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    const Integer cz = c;
    unsigned long r = 1;
    auto step = [&](const Integer& v) { return mod(v * v + cz, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        const unsigned long lim = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = step(y);
          q = mod(q * abs(x - y), n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batched product hit zero; retrace one step at a time.
      do {
        ys = step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

Factorization factor_int(const Integer& n) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (unsigned long q : small_primes()) {
    if (m == 1) break;
    if (Integer(q) * q > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
      ++found[Integer(q)];
    }
  }
  factor_into(m, found, 1);
  for (auto& [prime, e] : found) out.factors.emplace_back(prime, e);
  if (out.value() != n) throw InternalError("factorization does not reconstruct its input");
  return out;
}

std::string to_string(const Factorization& f) {
  std::ostringstream s;
  if (f.sign < 0) s << '-';
  if (f.factors.empty()) {
    s << '1';
    return s.str();
  }
  bool first = true;
  for (const auto& [prime, e] : f.factors) {
    if (!first) s << " * ";
    first = false;
    s << prime;
    if (e > 1) s << '^' << e;
  }
  return s.str();
}

}  // namespace derinv
