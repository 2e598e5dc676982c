#pragma once

// Prime fields, their finite extensions, and polynomials over F_p.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "derinv/poly.hpp"

namespace derinv {

/// Polynomial over the prime field F_p, ascending coefficients in [0, p).
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
  /// Reduces integer coefficients modulo p.
  static FpPoly from_int(const IntPoly& f, std::uint32_t p);
  static FpPoly constant(std::uint32_t p, std::uint64_t c);
  static FpPoly monomial(std::uint32_t p, std::uint32_t c, std::size_t degree);
  /// t^n - 1 over F_p.
  static FpPoly x_pow_minus_one(std::uint32_t p, std::size_t n);

  std::uint32_t p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t leading() const;
  std::uint32_t eval(std::uint32_t x) const;
  FpPoly monic() const;

  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly scaled(std::uint32_t s) const;
  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

 private:
  void trim();
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

// Modular helpers on F_p.
std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// base^e mod m.
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m);
FpPoly derivative(const FpPoly& f);
/// f(t + c).
FpPoly shift(const FpPoly& f, std::uint32_t c);
/// f(g(t)).
FpPoly compose(const FpPoly& f, const FpPoly& g);
bool is_irreducible(const FpPoly& f);
/// Total order used for canonical output: degree, then sum c_i p^i.
bool canonical_less(const FpPoly& a, const FpPoly& b);
std::string to_string(const FpPoly& f, char var = 't');
/// Parses the integer polynomial grammar and reduces modulo p.
FpPoly parse_fp_poly(std::string_view text, std::uint32_t p, char var = 't');

bool is_prime_u64(std::uint64_t n);

/// Seed override for the randomized splitting steps. Unset means the seed
/// is derived from the polynomial being split, so results are reproducible.
void set_seed_override(std::optional<std::uint64_t> seed);

// ---------------------------------------------------------------- F_{p^k} --

class FqField;
using FieldRef = std::shared_ptr<const FqField>;

class FqField {
 public:
  /// Uses the given monic irreducible modulus; throws if it is reducible.
  static FieldRef with_modulus(const FpPoly& modulus);

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  const FpPoly& modulus() const { return modulus_; }
  /// p^k
  const Integer& order() const { return order_; }
  std::string to_string() const;

  friend bool operator==(const FqField& a, const FqField& b) { return a.modulus_ == b.modulus_; }

 private:
  FqField(FpPoly modulus);
  std::uint32_t p_;
  unsigned k_;
  FpPoly modulus_;
  Integer order_;
};

/// F_{p^k} with the monic irreducible modulus of degree k that minimizes
/// sum c_i p^i (k = 1 gives the modulus t).
FieldRef make_field(std::uint32_t p, unsigned k);

/// Element of an FqField; arithmetic between different fields throws.
class FqElem {
 public:
  FqElem(FieldRef field, const FpPoly& repr);
  static FqElem zero(const FieldRef& f);
  static FqElem one(const FieldRef& f);
  static FqElem from_int(const FieldRef& f, long v);
  /// The class of t modulo the field's modulus.
  static FqElem generator(const FieldRef& f);

  const FieldRef& field() const { return field_; }
  const FpPoly& repr() const { return repr_; }
  bool is_zero() const { return repr_.is_zero(); }
  bool is_one() const { return repr_.is_one(); }

  FqElem& operator+=(const FqElem& o);
  FqElem& operator-=(const FqElem& o);
  FqElem& operator*=(const FqElem& o);
  friend FqElem operator+(FqElem a, const FqElem& b) { return a += b; }
  friend FqElem operator-(FqElem a, const FqElem& b) { return a -= b; }
  friend FqElem operator*(FqElem a, const FqElem& b) { return a *= b; }
  FqElem operator-() const;
  FqElem inverse() const;
  FqElem pow(const Integer& e) const;
  friend bool operator==(const FqElem& a, const FqElem& b);

  /// Polynomial in u, e.g. "u+1".
  std::string to_string() const;
  std::size_t hash() const;

 private:
  FieldRef field_;
  FpPoly repr_;
};

/// Throws InvalidArgument unless a and b live in the same field.
void require_same_field(const FqField& a, const FqField& b);

/// Parses an element written as a polynomial in u (or an ascending CSV).
FqElem parse_fq_elem(const FieldRef& f, std::string_view text);
/// Orders elements of one field by their representatives (canonical_less).
bool canonical_less(const FqElem& a, const FqElem& b);

struct FqElemHash {
  std::size_t operator()(const FqElem& x) const { return x.hash(); }
};

// ------------------------------------------------------------- operations --

struct FpFactor {
  FpPoly factor;  // monic irreducible
  unsigned multiplicity = 0;
};

/// Squarefree split, distinct-degree, then equal-degree splitting. Factors
/// come back sorted by canonical_less.
std::vector<FpFactor> fp_factor(const FpPoly& f);

/// Least e >= 1 with x^e = 1.
Integer element_order(const FqElem& x);

/// Least m >= 1 with f | t^m - 1. Requires f(0) != 0 and deg f >= 1.
Integer period(const FpPoly& f);

/// All distinct roots of f that lie in F, in canonical order.
std::vector<FqElem> fq_roots(const FpPoly& f, const FieldRef& F);

}  // namespace derinv
