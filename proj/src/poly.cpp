#include "derinv/poly.hpp"

#include <algorithm>
#include <map>

#include "derinv/errors.hpp"

namespace derinv {

// ---------------------------------------------------------------- IntPoly --

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

// ---------------------------------------------------------------- RatPoly --

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(const IntPoly& p) {
  coeffs_.reserve(p.size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::monic() const {
  const Rational lc = leading();
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / lc;
  return RatPoly(std::move(out));
}

IntPoly RatPoly::primitive_integer() const {
  if (coeffs_.empty()) return {};
  Integer den = 1;
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i].get_num() * (den / coeffs_[i].get_den());
  return primitive_part(IntPoly(std::move(out)));
}

// ---------------------------------------------------------- basic algebra --

IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<Integer> out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return {};
  Integer c = content(f);
  if (f.leading() < 0) c = -c;
  std::vector<Integer> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidArgument("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Integer& lb = b.leading();
  // One multiplication by lc(b) per step, deg a - deg b + 1 steps in total.
  for (int d = a.degree(); d >= db; --d) {
    const Integer lead = r[d];
    for (int i = 0; i < d; ++i) r[i] *= lb;
    r[d] = 0;
    if (lead != 0) {
      for (int j = 0; j < db; ++j) r[d - db + j] -= lead * b.coeffs()[j];
    }
  }
  return IntPoly(std::move(r));
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InternalError("inexact polynomial division");
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Integer> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  const Integer& lb = b.leading();
  for (int d = a.degree(); d >= db; --d) {
    if (r[d] == 0) continue;
    if (!mpz_divisible_p(r[d].get_mpz_t(), lb.get_mpz_t())) throw InternalError("inexact polynomial division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[d].get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) r[d - db + j] -= c * b.coeffs()[j];
    q[d - db] = std::move(c);
  }
  for (const auto& x : r) {
    if (x != 0) throw InternalError("inexact polynomial division");
  }
  return IntPoly(std::move(q));
}

bool divides_rational(const IntPoly& b, const IntPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (b.degree() == 0 || a.is_zero()) return true;
  return pseudo_remainder(a, b).is_zero();
}

IntPoly power(const IntPoly& f, unsigned e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = f;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

IntPoly shift(const IntPoly& f, const Integer& c) {
  // Horner in (t + c); quadratic, degrees stay in the low thousands.
  std::vector<Integer> acc;
  for (int i = f.degree(); i >= 0; --i) {
    acc.emplace_back(0);
    for (std::size_t j = acc.size() - 1; j > 0; --j) acc[j] = acc[j - 1] + c * acc[j];
    acc[0] = c * acc[0] + f.coeffs()[i];
  }
  return IntPoly(std::move(acc));
}

IntPoly negate_variable(const IntPoly& f) {
  std::vector<Integer> out(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPoly(std::move(out));
}

Integer discriminant(const IntPoly& f) {
  const int d = f.degree();
  if (d < 1) throw InvalidArgument("discriminant of a constant polynomial");
  Integer r = resultant(f, derivative(f));
  if (!mpz_divisible_p(r.get_mpz_t(), f.leading().get_mpz_t())) throw InternalError("discriminant not integral");
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) r = -r;
  return r;
}

// ---------------------------------------------------- gcd and squarefree --

IntPoly gcd_rational(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  IntPoly a = primitive_part(f);
  IntPoly b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

std::vector<SquarefreePart> squarefree_decomposition(const IntPoly& f) {
  if (f.degree() < 1) throw InvalidArgument("squarefree decomposition of a constant polynomial");
  const IntPoly p = primitive_part(f);
  const IntPoly dp = derivative(p);
  const IntPoly a0 = gcd_rational(p, dp);
  IntPoly b = exact_divide(p, a0);
  IntPoly c = exact_divide(dp, a0);
  IntPoly d = c - derivative(b);
  std::vector<SquarefreePart> out;
  for (unsigned i = 1; b.degree() > 0; ++i) {
    IntPoly a = d.is_zero() ? primitive_part(b) : gcd_rational(b, d);
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - derivative(b);
    if (a.degree() > 0) out.push_back({std::move(a), i});
  }
  return out;
}

IntPoly radical(const IntPoly& f) {
  IntPoly g = IntPoly::constant(1);
  for (const auto& part : squarefree_decomposition(f)) g = g * part.factor;
  return g;
}

IntPoly cyclotomic(unsigned n) {
  if (n == 0) throw InvalidArgument("cyclotomic polynomial index must be positive");
  std::map<unsigned, IntPoly> cache;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    IntPoly phi = IntPoly::x_pow_minus_one(d);
    for (const auto& [e, phi_e] : cache) {
      if (d % e == 0) phi = exact_divide(phi, phi_e);
    }
    cache.emplace(d, std::move(phi));
  }
  return cache.at(n);
}

// ------------------------------------------------------------ composed sum --

RatPoly composed_sum(const RatPoly& g) {
  if (g.degree() < 1 || g.leading() != 1) throw InvalidArgument("composed_sum needs a monic non-constant polynomial");
  const IntPoly G = g.primitive_integer();
  if (gcd_rational(G, derivative(G)).degree() > 0) throw InvalidArgument("composed_sum needs a squarefree polynomial");

  // Res_x(G(x), G(t0 - x)) = lc(G)^(2l) * prod_{i,j} (t0 - l_i - l_j), so the
  // resultant is a polynomial in t0 of degree l^2; recover it by sampling at
  // l^2 + 1 integer points and Newton interpolation.
  const std::size_t ell = static_cast<std::size_t>(G.degree());
  const std::size_t points = ell * ell + 1;
  const IntPoly reflected = negate_variable(G);  // G(-x)
  std::vector<Rational> values(points);
  for (std::size_t k = 0; k < points; ++k) {
    const Integer t0 = static_cast<long>(k);
    values[k] = resultant(G, shift(reflected, -t0));  // G(-(x - t0))
  }

  // Divided differences in place, then expand the Newton form.
  for (std::size_t level = 1; level < points; ++level) {
    for (std::size_t k = points - 1; k >= level; --k) {
      values[k] = (values[k] - values[k - 1]) / static_cast<long>(level);
      if (k == level) break;
    }
  }
  std::vector<Rational> poly{values[points - 1]};
  for (std::size_t k = points - 1; k-- > 0;) {
    // poly = poly * (t - k) + values[k]
    std::vector<Rational> next(poly.size() + 1);
    const Rational xk = static_cast<long>(k);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * xk;
    }
    next[0] += values[k];
    poly = std::move(next);
  }
  RatPoly out(std::move(poly));
  if (out.degree() != static_cast<int>(ell * ell)) throw InternalError("composed sum has unexpected degree");
  return out.monic();
}

}  // namespace derinv
