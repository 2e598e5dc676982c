#include <omp.h>

#include <exception>
#include <limits>

#include "derinv/kernels.hpp"

namespace derinv::kernels::omp {

Integer bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.n;
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    const long rows = static_cast<long>(n - k - 1);
    // Rows below the pivot update independently.
#pragma omp parallel for schedule(static)
    for (long r = 0; r < rows; ++r) {
      const std::size_t i = k + 1 + static_cast<std::size_t>(r);
      Integer v;
      for (std::size_t j = k + 1; j < n; ++j) {
        v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

std::optional<IndexPair> find_progression_pair(std::size_t count, const ProgressionTest& test) {
  // Each thread records the first hit in its rows; the minimum over all
  // hits is the pair the serial scan would return.
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::size_t best = none;
  std::exception_ptr failure;
  const long rows = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
  for (long r = 0; r < rows; ++r) {
    const std::size_t i = static_cast<std::size_t>(r);
    try {
      for (std::size_t j = 0; j < count; ++j) {
        if (test(i, j)) {
          best = std::min(best, i * count + j);
          break;
        }
      }
    } catch (...) {
#pragma omp critical(derinv_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (best == none) return std::nullopt;
  return IndexPair{best / count, best % count};
}

void for_each_row(std::size_t count, const std::function<void(std::size_t)>& row) {
  std::exception_ptr failure;
  const long rows = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long r = 0; r < rows; ++r) {
    try {
      row(static_cast<std::size_t>(r));
    } catch (...) {
#pragma omp critical(derinv_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace derinv::kernels::omp
