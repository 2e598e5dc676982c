#include "derinv/lie.hpp"

namespace derinv {

namespace {

Vec zero_vec(const FieldRef& F, std::size_t n) { return Vec(n, FqElem::zero(F)); }

Vec unit_vec(const FieldRef& F, std::size_t n, std::size_t i) {
  Vec v = zero_vec(F, n);
  v[i] = FqElem::one(F);
  return v;
}

// Index of y_ij (i < j) among the m(m-1)/2 central basis vectors.
std::size_t pair_index(std::size_t m, std::size_t i, std::size_t j) { return i * (2 * m - i - 1) / 2 + (j - i - 1); }

}  // namespace

LieAlgebra build_abelian(const FieldRef& F, std::size_t dim) { return LieAlgebra::from_entries(F, dim, {}); }

LieAlgebra build_heisenberg(const FieldRef& F) { return LieAlgebra::from_entries(F, 3, {{0, 1, unit_vec(F, 3, 2)}}); }

LieAlgebra build_w12(const FieldRef& F) {
  if (F->p() != 2) throw InvalidArgument("W(1;2) needs characteristic 2");
  return LieAlgebra::from_entries(F, 3, {{0, 1, unit_vec(F, 3, 2)}, {0, 2, unit_vec(F, 3, 1)}, {1, 2, unit_vec(F, 3, 0)}});
}

LinearMap w12_derivation(const FieldRef& F, const FqElem& lambda) {
  if (F->p() != 2) throw InvalidArgument("W(1;2) needs characteristic 2");
  require_same_field(*F, *lambda.field());
  return LinearMap::diagonal(F, {FqElem::one(F), lambda, FqElem::one(F) + lambda});
}

LieAlgebra build_free_nilpotent2(std::size_t m, const FieldRef& F) {
  if (m < 2) throw InvalidArgument("free nilpotent algebra needs at least 2 generators");
  const std::size_t dim = m + m * (m - 1) / 2;
  std::vector<LieAlgebra::Entry> entries;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) entries.push_back({i, j, unit_vec(F, dim, m + pair_index(m, i, j))});
  }
  return LieAlgebra::from_entries(F, dim, entries);
}

LinearMap derivation_extend(const LinearMap& A) {
  const std::size_t m = A.size();
  if (m < 2) throw InvalidArgument("derivation_extend needs at least 2 generators");
  const FieldRef& F = A.field();
  const std::size_t dim = m + m * (m - 1) / 2;
  LinearMap D = LinearMap::zero(F, dim);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) D.at(k, i) = A.at(k, i);
  }
  // [x_a, x_b] = y_ab for a < b, -y_ba for a > b.
  auto add_bracket = [&](std::size_t col, const FqElem& c, std::size_t a, std::size_t b) {
    if (a == b || c.is_zero()) return;
    if (a < b) {
      D.at(m + pair_index(m, a, b), col) += c;
    } else {
      D.at(m + pair_index(m, b, a), col) -= c;
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::size_t col = m + pair_index(m, i, j);
      for (std::size_t k = 0; k < m; ++k) {
        add_bracket(col, A.at(k, i), k, j);  // [A x_i, x_j]
        add_bracket(col, A.at(k, j), i, k);  // [x_i, A x_j]
      }
    }
  }
  return D;
}

LinearMap negated_three_cycle(const FieldRef& F) {
  return LinearMap::cyclic_shift(F, 3).scaled(-FqElem::one(F));
}

std::optional<Witness> build_witness(unsigned n, std::uint32_t p, bool pad, unsigned cap_k) {
  auto prog = find_progression(n, p, cap_k);
  if (!prog) return std::nullopt;
  const FieldRef F = prog->field;
  const std::size_t dim = p + 1;
  // Basis order: y, v_0, ..., v_{p-1}.
  std::vector<LieAlgebra::Entry> entries;
  for (std::size_t i = 0; i < p; ++i) entries.push_back({0, 1 + i, unit_vec(F, dim, 1 + (i + 1) % p)});
  LieAlgebra L = LieAlgebra::from_entries(F, dim, entries);

  Vec diag{prog->beta};
  FqElem eigen = prog->alpha;
  for (std::size_t i = 0; i < p; ++i, eigen += prog->beta) diag.push_back(eigen);
  LinearMap D = LinearMap::diagonal(F, diag);

  if (pad) {
    L = direct_sum(L, build_abelian(F, n));
    D = direct_sum(D, LinearMap::cyclic_shift(F, n));
  }
  return Witness{std::move(L), std::move(D), std::move(*prog)};
}

}  // namespace derinv
