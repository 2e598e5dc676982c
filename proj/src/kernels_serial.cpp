#include "derinv/kernels.hpp"

namespace derinv::kernels::serial {

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
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
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
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (test(i, j)) return IndexPair{i, j};
    }
  }
  return std::nullopt;
}

void for_each_row(std::size_t count, const std::function<void(std::size_t)>& row) {
  for (std::size_t i = 0; i < count; ++i) row(i);
}

}  // namespace derinv::kernels::serial
