#include <atomic>
#include <sstream>

#include "derinv/errors.hpp"
#include "derinv/ffield.hpp"

namespace derinv {

std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw InvalidArgument("inverse of zero in F_p");
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// ------------------------------------------------------------------ FpPoly --

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw InvalidArgument("modulus must be a prime");
  for (auto& c : c_) c %= p;
  trim();
}

FpPoly FpPoly::from_int(const IntPoly& f, std::uint32_t p) {
  std::vector<std::uint32_t> out(f.size());
  Integer r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), p);
    out[i] = static_cast<std::uint32_t>(r.get_ui());
  }
  return FpPoly(p, std::move(out));
}

FpPoly FpPoly::constant(std::uint32_t p, std::uint64_t c) {
  return FpPoly(p, {static_cast<std::uint32_t>(c % p)});
}

FpPoly FpPoly::monomial(std::uint32_t p, std::uint32_t c, std::size_t degree) {
  std::vector<std::uint32_t> v(degree + 1);
  v[degree] = c;
  return FpPoly(p, std::move(v));
}

FpPoly FpPoly::x_pow_minus_one(std::uint32_t p, std::size_t n) {
  std::vector<std::uint32_t> v(n + 1);
  v[0] = p - 1;
  v[n] = (v[n] + 1) % p;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t FpPoly::leading() const {
  if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return c_.back();
}

std::uint32_t FpPoly::eval(std::uint32_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
  return static_cast<std::uint32_t>(acc);
}

FpPoly FpPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(fp_inv(leading(), p_));
}

FpPoly FpPoly::scaled(std::uint32_t s) const {
  std::vector<std::uint32_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = fp_mul(c_[i], s % p_, p_);
  return FpPoly(p_, std::move(out));
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  if (o.p_ != p_) throw InvalidArgument("characteristic mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
  if (o.p_ != p_) throw InvalidArgument("characteristic mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
  trim();
  return *this;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw InvalidArgument("characteristic mismatch");
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
  }
  std::vector<std::uint32_t> out(acc.begin(), acc.end());
  return FpPoly(a.p_, std::move(out));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.p() != b.p()) throw InvalidArgument("characteristic mismatch");
  const std::uint32_t p = a.p();
  if (a.degree() < b.degree()) return {FpPoly(p, {}), a};
  std::vector<std::uint32_t> r = a.coeffs();
  std::vector<std::uint32_t> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  const std::uint32_t inv = fp_inv(b.leading(), p);
  const auto& bc = b.coeffs();
  for (int d = a.degree(); d >= db; --d) {
    if (r[d] == 0) continue;
    const std::uint32_t c = fp_mul(r[d], inv, p);
    q[d - db] = c;
    for (int j = 0; j <= db; ++j) {
      const std::uint32_t sub = fp_mul(c, bc[j], p);
      r[d - db + j] = (r[d - db + j] + p - sub) % p;
    }
  }
  r.resize(db);
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a;
  FpPoly y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m) {
  if (e < 0) throw InvalidArgument("negative exponent");
  FpPoly result = FpPoly::constant(m.p(), 1) % m;
  const FpPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

FpPoly derivative(const FpPoly& f) {
  if (f.degree() < 1) return FpPoly(f.p(), {});
  std::vector<std::uint32_t> out(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) out[i - 1] = fp_mul(f.coeffs()[i], static_cast<std::uint32_t>(i % f.p()), f.p());
  return FpPoly(f.p(), std::move(out));
}

FpPoly shift(const FpPoly& f, std::uint32_t c) {
  const FpPoly lin(f.p(), {c % f.p(), 1});
  return compose(f, lin);
}

FpPoly compose(const FpPoly& f, const FpPoly& g) {
  FpPoly acc(f.p(), {});
  for (int i = f.degree(); i >= 0; --i) acc = acc * g + FpPoly::constant(f.p(), f.coeffs()[i]);
  return acc;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = 1, base = a % n, e = d;
    while (e) {
      if (e & 1) x = mulmod(x, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible(const FpPoly& f) {
  // Rabin: x^(p^n) = x mod f, and gcd(x^(p^(n/q)) - x, f) = 1 for primes q | n.
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FpPoly fm = f.monic();
  const std::uint32_t p = f.p();
  const FpPoly x = FpPoly::monomial(p, 1, 1);
  std::vector<int> prime_divisors;
  for (int q = 2, m = n; q <= m; ++q) {
    if (m % q == 0) {
      prime_divisors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  // powers[i] = x^(p^i) mod f
  std::vector<FpPoly> powers{x % fm};
  for (int i = 1; i <= n; ++i) powers.push_back(powmod(powers.back(), Integer(p), fm));
  if (powers[n] != x % fm) return false;
  for (int q : prime_divisors) {
    if (gcd(powers[n / q] - x, fm).degree() > 0) return false;
  }
  return true;
}

bool canonical_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  }
  return false;
}

std::string to_string(const FpPoly& f, char var) {
  std::vector<Integer> c(f.coeffs().begin(), f.coeffs().end());
  return to_string(IntPoly(std::move(c)), var);
}

FpPoly parse_fp_poly(std::string_view text, std::uint32_t p, char var) {
  return FpPoly::from_int(parse_poly(text, var), p);
}

namespace {
std::atomic<bool> g_seed_set{false};
std::atomic<std::uint64_t> g_seed{0};
}  // namespace

void set_seed_override(std::optional<std::uint64_t> seed) {
  g_seed.store(seed.value_or(0));
  g_seed_set.store(seed.has_value());
}

namespace detail {
std::uint64_t splitting_seed(const FpPoly& f) {
  if (g_seed_set.load()) return g_seed.load();
  // FNV-1a over (p, coefficients).
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  };
  mix(f.p());
  for (auto c : f.coeffs()) mix(c);
  return h;
}
}  // namespace detail

}  // namespace derinv
