#pragma once

// Data-parallel kernels. Every kernel has a serial reference in
// derinv::kernels::serial and an OpenMP version in derinv::kernels::omp with
// identical results; tests check the two against each other and the
// benchmark target compares their speed.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "derinv/poly.hpp"

namespace derinv::kernels {

/// Dense square integer matrix, row-major.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<Integer> a;

  Integer& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Pair (i, j) of indices into a candidate set such that start = x[i],
/// step = x[j] generates a progression staying inside the set.
using IndexPair = std::pair<std::size_t, std::size_t>;

/// Predicate deciding whether the progression x[i] + k x[j], k < p, stays in X.
using ProgressionTest = std::function<bool(std::size_t, std::size_t)>;

namespace serial {
/// Fraction-free (Bareiss) determinant with row pivoting.
Integer bareiss_determinant(IntMatrix m);
/// First (lexicographic) pair accepted by `test`, scanning all |X|^2 pairs.
std::optional<IndexPair> find_progression_pair(std::size_t count, const ProgressionTest& test);
/// Evaluates `row` for every index in [0, count) in order.
void for_each_row(std::size_t count, const std::function<void(std::size_t)>& row);
}  // namespace serial

namespace omp {
Integer bareiss_determinant(IntMatrix m);
/// Same answer as the serial scan (the lexicographically first pair).
std::optional<IndexPair> find_progression_pair(std::size_t count, const ProgressionTest& test);
/// Rows are independent; each must write only to its own output slot.
void for_each_row(std::size_t count, const std::function<void(std::size_t)>& row);
}  // namespace omp

}  // namespace derinv::kernels
