#pragma once

// Finite-dimensional Lie algebras over F_{p^k} given by structure
// constants, linear maps on them, and the example constructions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "derinv/errors.hpp"
#include "derinv/ffield.hpp"
#include "derinv/shalev.hpp"

namespace derinv {

using Vec = std::vector<FqElem>;

/// Axiom failure found while validating a bracket table. Indices are
/// 1-based basis positions: two for antisymmetry, three for Jacobi.
class LieAxiomError : public InvalidArgument {
 public:
  LieAxiomError(const std::string& what, std::vector<std::size_t> indices)
      : InvalidArgument(what), indices_(std::move(indices)) {}
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

/// Square matrix over a field acting on coordinate columns:
/// D e_j = sum_i at(i, j) e_i.
class LinearMap {
 public:
  LinearMap(FieldRef field, std::size_t n, std::vector<FqElem> entries);
  static LinearMap zero(const FieldRef& F, std::size_t n);
  static LinearMap identity(const FieldRef& F, std::size_t n);
  static LinearMap diagonal(const FieldRef& F, const Vec& d);
  /// Companion matrix of t^n - 1, the cyclic shift e_i -> e_{i+1 mod n}.
  static LinearMap cyclic_shift(const FieldRef& F, std::size_t n);

  const FieldRef& field() const { return field_; }
  std::size_t size() const { return n_; }
  const FqElem& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  FqElem& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  Vec apply(const Vec& x) const;
  /// Column j, i.e. the image of e_j.
  Vec column(std::size_t j) const;
  bool is_identity() const;
  bool is_zero() const;
  std::size_t rank() const;

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  LinearMap scaled(const FqElem& c) const;
  friend bool operator==(const LinearMap& a, const LinearMap& b);

 private:
  FieldRef field_;
  std::size_t n_;
  std::vector<FqElem> a_;
};

/// Block diagonal sum of a and b.
LinearMap direct_sum(const LinearMap& a, const LinearMap& b);

class LieAlgebra {
 public:
  /// Sparse bracket entry [e_i, e_j] = value with 0-based i < j.
  struct Entry {
    std::size_t i;
    std::size_t j;
    Vec value;
  };

  /// Validates antisymmetry and the Jacobi identity; throws LieAxiomError.
  /// table[i][j] is the coordinate vector of [e_i, e_j].
  static LieAlgebra make(FieldRef field, std::size_t dim, std::vector<std::vector<Vec>> table);
  /// Fills the lower triangle by antisymmetry, then validates.
  static LieAlgebra from_entries(FieldRef field, std::size_t dim, const std::vector<Entry>& entries);

  const FieldRef& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vec& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Nonzero entries with i < j.
  std::vector<Entry> entries() const;
  /// ad(e_i) as a linear map.
  LinearMap ad(std::size_t i) const;

 private:
  LieAlgebra(FieldRef field, std::size_t dim, std::vector<Vec> table);
  FieldRef field_;
  std::size_t dim_;
  std::vector<Vec> table_;
};

/// Block direct sum; brackets between the two summands vanish.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

struct DerivationCheck {
  bool ok = true;
  /// First failing (i, j), 0-based, i < j.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

DerivationCheck is_derivation(const LieAlgebra& L, const LinearMap& D);

struct NilpotencyReport {
  /// Dimensions of g, [g,g], [g,[g,g]], ... until zero or stable.
  std::vector<std::size_t> series_dims;
  /// Set iff nilpotent.
  std::optional<unsigned> nil_class;

  bool nilpotent() const { return nil_class.has_value(); }
};

NilpotencyReport nilpotency_class(const LieAlgebra& L);

inline constexpr std::uint64_t kDefaultOrderCap = 1000000;

/// Least e <= cap with D^e = id; empty if D is singular or no such e.
std::optional<std::uint64_t> map_order(const LinearMap& D, std::uint64_t cap = kDefaultOrderCap);

/// r(D) == 0, with r's coefficients embedded into D's field.
bool poly_annihilates(const FpPoly& r, const LinearMap& D);

/// det(t I - D), ascending coefficients.
Vec characteristic_polynomial(const LinearMap& D);

/// Row-reduced echelon basis of span(vectors).
std::vector<Vec> echelon_basis(std::vector<Vec> vectors);

// ------------------------------------------------------------- builders --

LieAlgebra build_abelian(const FieldRef& F, std::size_t dim);
/// Basis x, y, z with [x, y] = z.
LieAlgebra build_heisenberg(const FieldRef& F);
/// W(1;2): [x1,x2] = x3, [x1,x3] = x2, [x2,x3] = x1. Characteristic 2 only.
LieAlgebra build_w12(const FieldRef& F);
/// diag(1, lambda, 1 + lambda).
LinearMap w12_derivation(const FieldRef& F, const FqElem& lambda);

/// Free nilpotent class-2 algebra on m generators: basis x_1..x_m followed
/// by y_ij (i < j, lexicographic) with [x_i, x_j] = y_ij and y central.
LieAlgebra build_free_nilpotent2(std::size_t m, const FieldRef& F);
/// Unique derivation of the free nilpotent class-2 algebra restricting to
/// A on the generators.
LinearMap derivation_extend(const LinearMap& A);
/// -(x1 -> x2 -> x3 -> x1) on three generators.
LinearMap negated_three_cycle(const FieldRef& F);

struct Witness {
  LieAlgebra algebra;
  LinearMap derivation;
  Progression progression;
};

/// Basis y, v_0..v_{p-1} with [y, v_i] = v_{i+1 mod p} and
/// D = diag(1, alpha, alpha + 1, ..., alpha + p - 1). With pad, an
/// n-dimensional abelian summand carries the cyclic shift so that D has
/// order exactly n. Empty iff n is not in B_p.
std::optional<Witness> build_witness(unsigned n, std::uint32_t p, bool pad = false, unsigned cap_k = kDefaultCapK);

}  // namespace derinv
