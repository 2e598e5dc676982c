#include <algorithm>
#include <random>
#include <sstream>

#include "derinv/errors.hpp"
#include "derinv/factor.hpp"
#include "derinv/ffield.hpp"
#include "detail.hpp"

namespace derinv {

// ------------------------------------------------------------------ FqField --

FqField::FqField(FpPoly modulus)
    : p_(modulus.p()), k_(static_cast<unsigned>(modulus.degree())), modulus_(std::move(modulus)) {
  mpz_ui_pow_ui(order_.get_mpz_t(), p_, k_);
}

FieldRef FqField::with_modulus(const FpPoly& modulus) {
  if (!is_prime_u64(modulus.p())) throw InvalidArgument("field characteristic must be prime");
  if (modulus.degree() < 1 || modulus.leading() != 1) throw InvalidArgument("field modulus must be monic of degree >= 1");
  if (!is_irreducible(modulus)) throw InvalidArgument("field modulus " + derinv::to_string(modulus) + " is reducible");
  return FieldRef(new FqField(modulus));
}

std::string FqField::to_string() const {
  std::ostringstream s;
  s << "GF(" << p_ << '^' << k_ << "; " << derinv::to_string(modulus_, 'u') << ')';
  return s.str();
}

FieldRef make_field(std::uint32_t p, unsigned k) {
  if (!is_prime_u64(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("extension degree must be at least 1");
  // Enumerate monic degree-k polynomials by increasing sum c_i p^i.
  std::vector<std::uint32_t> digits(k + 1, 0);
  digits[k] = 1;
  while (true) {
    FpPoly candidate(p, digits);
    if (is_irreducible(candidate)) return FieldRef(FqField::with_modulus(candidate));
    std::size_t i = 0;
    while (i < k && ++digits[i] == p) digits[i++] = 0;
    if (i == k) throw InternalError("no irreducible polynomial found");
  }
}

void require_same_field(const FqField& a, const FqField& b) {
  if (&a != &b && !(a == b)) throw InvalidArgument("field mismatch: " + a.to_string() + " vs " + b.to_string());
}

// ------------------------------------------------------------------- FqElem --

FqElem::FqElem(FieldRef field, const FpPoly& repr) : field_(std::move(field)) {
  if (!field_) throw InvalidArgument("element without a field");
  if (repr.p() != field_->p()) throw InvalidArgument("characteristic mismatch");
  repr_ = repr.degree() >= static_cast<int>(field_->k()) ? repr % field_->modulus() : repr;
}

FqElem FqElem::zero(const FieldRef& f) { return FqElem(f, FpPoly(f->p(), {})); }
FqElem FqElem::one(const FieldRef& f) { return FqElem(f, FpPoly::constant(f->p(), 1)); }

FqElem FqElem::from_int(const FieldRef& f, long v) {
  const long p = f->p();
  return FqElem(f, FpPoly::constant(f->p(), static_cast<std::uint64_t>(((v % p) + p) % p)));
}

FqElem FqElem::generator(const FieldRef& f) { return FqElem(f, FpPoly::monomial(f->p(), 1, 1)); }

FqElem& FqElem::operator+=(const FqElem& o) {
  require_same_field(*field_, *o.field_);
  repr_ += o.repr_;
  return *this;
}

FqElem& FqElem::operator-=(const FqElem& o) {
  require_same_field(*field_, *o.field_);
  repr_ -= o.repr_;
  return *this;
}

FqElem& FqElem::operator*=(const FqElem& o) {
  require_same_field(*field_, *o.field_);
  repr_ = (repr_ * o.repr_) % field_->modulus();
  return *this;
}

FqElem FqElem::operator-() const { return zero(field_) - *this; }

FqElem FqElem::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(-e);
  return FqElem(field_, powmod(repr_, e, field_->modulus()));
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  return pow(field_->order() - 2);
}

bool operator==(const FqElem& a, const FqElem& b) {
  require_same_field(*a.field_, *b.field_);
  return a.repr_ == b.repr_;
}

std::string FqElem::to_string() const { return derinv::to_string(repr_, 'u'); }

std::size_t FqElem::hash() const {
  std::size_t h = 0;
  for (auto c : repr_.coeffs()) h = h * 1000003U + c + 1;
  return h;
}

bool canonical_less(const FqElem& a, const FqElem& b) {
  require_same_field(*a.field(), *b.field());
  return canonical_less(a.repr(), b.repr());
}

FqElem parse_fq_elem(const FieldRef& f, std::string_view text) {
  return FqElem(f, parse_fp_poly(text, f->p(), 'u'));
}

// --------------------------------------------------- polynomials over F_q --

namespace {

// Minimal dense polynomial over F_q, used only for root finding.
struct FqPoly {
  FieldRef F;
  std::vector<FqElem> c;

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

FqPoly lift(const FpPoly& f, const FieldRef& F) {
  FqPoly out{F, {}};
  for (auto x : f.coeffs()) out.c.push_back(FqElem::from_int(F, x));
  out.trim();
  return out;
}

FqPoly mul(const FqPoly& a, const FqPoly& b) {
  FqPoly out{a.F, {}};
  if (a.c.empty() || b.c.empty()) return out;
  out.c.assign(a.c.size() + b.c.size() - 1, FqElem::zero(a.F));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  }
  out.trim();
  return out;
}

FqPoly add(FqPoly a, const FqPoly& b) {
  if (b.c.size() > a.c.size()) a.c.resize(b.c.size(), FqElem::zero(a.F));
  for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] += b.c[i];
  a.trim();
  return a;
}

FqPoly sub(FqPoly a, const FqPoly& b) {
  if (b.c.size() > a.c.size()) a.c.resize(b.c.size(), FqElem::zero(a.F));
  for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
  a.trim();
  return a;
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  FqPoly r = a;
  FqPoly q{a.F, {}};
  if (a.degree() < b.degree()) return {q, r};
  q.c.assign(a.degree() - b.degree() + 1, FqElem::zero(a.F));
  const FqElem inv = b.c.back().inverse();
  const int db = b.degree();
  for (int d = a.degree(); d >= db; --d) {
    if (r.c[d].is_zero()) continue;
    const FqElem k = r.c[d] * inv;
    q.c[d - db] = k;
    for (int j = 0; j <= db; ++j) r.c[d - db + j] -= k * b.c[j];
  }
  r.trim();
  q.trim();
  return {q, r};
}

FqPoly monic(FqPoly a) {
  if (a.c.empty()) return a;
  const FqElem inv = a.c.back().inverse();
  for (auto& x : a.c) x *= inv;
  return a;
}

FqPoly gcd(FqPoly a, FqPoly b) {
  while (!b.c.empty()) {
    FqPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

FqPoly powmod(const FqPoly& base, const Integer& e, const FqPoly& m) {
  FqPoly result{m.F, {FqElem::one(m.F)}};
  result = divmod(result, m).second;
  const FqPoly b = divmod(base, m).second;
  for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    result = divmod(mul(result, result), m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(mul(result, b), m).second;
  }
  return result;
}

FqElem random_elem(const FieldRef& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> digit(0, F->p() - 1);
  std::vector<std::uint32_t> c(F->k());
  for (auto& x : c) x = digit(rng);
  return FqElem(F, FpPoly(F->p(), std::move(c)));
}

// g is monic and a product of distinct linear factors over F.
void split_linear(const FqPoly& g, std::mt19937_64& rng, std::vector<FqElem>& roots) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    roots.push_back(-g.c[0]);
    return;
  }
  const FieldRef& F = g.F;
  while (true) {
    const FqElem a = random_elem(F, rng);
    FqPoly w{F, {}};
    if (F->p() == 2) {
      // Absolute trace of a*x: sum of (a x)^(2^i), i < k.
      FqPoly y = divmod(FqPoly{F, {FqElem::zero(F), a}}, g).second;
      w = y;
      for (unsigned i = 1; i < F->k(); ++i) {
        y = divmod(mul(y, y), g).second;
        w = add(std::move(w), y);
      }
    } else {
      const FqPoly xa{F, {a, FqElem::one(F)}};
      w = sub(powmod(xa, (F->order() - 1) / 2, g), FqPoly{F, {FqElem::one(F)}});
    }
    FqPoly d = gcd(g, w);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, roots);
      split_linear(divmod(g, d).first, rng, roots);
      return;
    }
  }
}

}  // namespace

std::vector<FqElem> fq_roots(const FpPoly& f, const FieldRef& F) {
  if (f.p() != F->p()) throw InvalidArgument("characteristic mismatch between polynomial and field");
  if (f.degree() < 1) throw InvalidArgument("fq_roots needs a non-constant polynomial");
  const FqPoly g = monic(lift(f, F));
  const FqPoly x{F, {FqElem::zero(F), FqElem::one(F)}};
  // Product of the distinct linear factors of f over F.
  const FqPoly split = gcd(g, sub(powmod(x, F->order(), g), x));
  std::mt19937_64 rng(detail::splitting_seed(f) ^ F->k());
  std::vector<FqElem> roots;
  split_linear(split, rng, roots);
  for (const auto& r : roots) {
    FqElem acc = FqElem::zero(F);
    for (auto it = g.c.rbegin(); it != g.c.rend(); ++it) acc = acc * r + *it;
    if (!acc.is_zero()) throw InternalError("root finding returned a non-root");
  }
  std::sort(roots.begin(), roots.end(), [](const FqElem& a, const FqElem& b) { return canonical_less(a, b); });
  return roots;
}

Integer element_order(const FqElem& x) {
  if (x.is_zero()) throw InvalidArgument("zero has no multiplicative order");
  const Integer group = x.field()->order() - 1;
  Integer e = group;
  for (const auto& [prime, mult] : factor_int(group).factors) {
    for (unsigned i = 0; i < mult; ++i) {
      const Integer candidate = e / prime;
      if (!x.pow(candidate).is_one()) break;
      e = candidate;
    }
  }
  return e;
}

}  // namespace derinv
