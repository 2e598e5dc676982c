#pragma once

// Dense univariate polynomials over Z and Q.
//
// Coefficients are stored in ascending order (coeffs[i] multiplies t^i) and
// trailing zeros are always stripped, so the zero polynomial is the empty
// vector and degree() == size() - 1 otherwise.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace derinv {

using Integer = mpz_class;
using Rational = mpq_class;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);
  /// t^n - 1
  static IntPoly x_pow_minus_one(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Integer> coeffs() const { return coeffs_; }
  /// Coefficient of t^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;
  Integer eval(const Integer& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& p);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;
  Rational eval(const Rational& x) const;

  /// Scaled to leading coefficient one. Throws on zero.
  RatPoly monic() const;
  /// The unique primitive integer polynomial with positive leading
  /// coefficient that is a rational multiple of *this.
  IntPoly primitive_integer() const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct SquarefreePart {
  IntPoly factor;  // primitive, positive leading coefficient
  unsigned multiplicity = 0;
};

// --- basic algebra ---------------------------------------------------------

IntPoly derivative(const IntPoly& f);
/// Positive gcd of the coefficients; zero for the zero polynomial.
Integer content(const IntPoly& f);
/// f / content(f), with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);
/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// a / b over Z. Throws InternalError if b does not divide a exactly.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);
/// True iff b divides a in Q[t].
bool divides_rational(const IntPoly& b, const IntPoly& a);
IntPoly power(const IntPoly& f, unsigned e);
/// f(t + c).
IntPoly shift(const IntPoly& f, const Integer& c);
/// f(-t).
IntPoly negate_variable(const IntPoly& f);

// --- resultants ------------------------------------------------------------

/// Res(f, g) = lc(f)^deg g * prod_{f(a)=0} g(a). Dispatches on degree:
/// Sylvester/Bareiss when both degrees are <= 8, subresultant PRS above.
Integer resultant(const IntPoly& f, const IntPoly& g);
/// Fraction-free determinant of the Sylvester matrix.
Integer resultant_sylvester(const IntPoly& f, const IntPoly& g);
/// Subresultant polynomial remainder sequence.
Integer resultant_subresultant(const IntPoly& f, const IntPoly& g);
/// Resultant over Q, by clearing denominators.
Rational resultant(const RatPoly& f, const RatPoly& g);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f).
Integer discriminant(const IntPoly& f);

// --- gcd, squarefree, cyclotomic -------------------------------------------

/// Primitive gcd over Q with positive leading coefficient.
IntPoly gcd_rational(const IntPoly& f, const IntPoly& g);
/// Yun's algorithm on the primitive part; factors ordered by multiplicity.
std::vector<SquarefreePart> squarefree_decomposition(const IntPoly& f);
/// Product of the squarefree factors (primitive, positive lc).
IntPoly radical(const IntPoly& f);
IntPoly cyclotomic(unsigned n);

/// Monic polynomial whose roots are all ordered pairwise sums of roots of
/// the monic squarefree g, computed by eliminating x from g(x), g(t - x).
RatPoly composed_sum(const RatPoly& g);

// --- text ------------------------------------------------------------------

/// Accepts the expression grammar in `var` or an ascending CSV list.
IntPoly parse_poly(std::string_view text, char var = 't');
/// Expression form, descending powers: "t^3-1", "2*t^2+t".
std::string to_string(const IntPoly& f, char var = 't');
std::string to_string(const RatPoly& f, char var = 't');

}  // namespace derinv
