#include "derinv/lie.hpp"

#include <string>

namespace derinv {

namespace {

Vec zero_vec(const FieldRef& F, std::size_t n) { return Vec(n, FqElem::zero(F)); }

Vec unit_vec(const FieldRef& F, std::size_t n, std::size_t i) {
  Vec v = zero_vec(F, n);
  v[i] = FqElem::one(F);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

void axpy(Vec& y, const FqElem& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (!x[k].is_zero()) y[k] += a * x[k];
  }
}

std::string vec_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------- LinearMap --

LinearMap::LinearMap(FieldRef field, std::size_t n, std::vector<FqElem> entries)
    : field_(std::move(field)), n_(n), a_(std::move(entries)) {
  if (!field_) throw InvalidArgument("linear map without a field");
  if (a_.size() != n * n) throw InvalidArgument("linear map is not square");
  for (const auto& x : a_) require_same_field(*x.field(), *field_);
}

LinearMap LinearMap::zero(const FieldRef& F, std::size_t n) { return LinearMap(F, n, zero_vec(F, n * n)); }

LinearMap LinearMap::identity(const FieldRef& F, std::size_t n) {
  LinearMap m = zero(F, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FqElem::one(F);
  return m;
}

LinearMap LinearMap::diagonal(const FieldRef& F, const Vec& d) {
  LinearMap m = zero(F, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

LinearMap LinearMap::cyclic_shift(const FieldRef& F, std::size_t n) {
  LinearMap m = zero(F, n);
  for (std::size_t j = 0; j < n; ++j) m.at((j + 1) % n, j) = FqElem::one(F);
  return m;
}

Vec LinearMap::apply(const Vec& x) const {
  if (x.size() != n_) throw InvalidArgument("vector length does not match the map");
  Vec y = zero_vec(field_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
    }
  }
  return y;
}

Vec LinearMap::column(std::size_t j) const {
  Vec c;
  c.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) c.push_back(at(i, j));
  return c;
}

bool LinearMap::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool LinearMap::is_zero() const { return is_zero_vec(a_); }

std::size_t LinearMap::rank() const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < n_; ++j) cols.push_back(column(j));
  return echelon_basis(std::move(cols)).size();
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix size mismatch");
  require_same_field(*a.field_, *b.field_);
  LinearMap c = LinearMap::zero(a.field_, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const FqElem& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) {
        if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return c;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix size mismatch");
  LinearMap c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix size mismatch");
  LinearMap c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

LinearMap LinearMap::scaled(const FqElem& s) const {
  LinearMap c = *this;
  for (auto& x : c.a_) x *= s;
  return c;
}

bool operator==(const LinearMap& a, const LinearMap& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

LinearMap direct_sum(const LinearMap& a, const LinearMap& b) {
  require_same_field(*a.field(), *b.field());
  const std::size_t n = a.size() + b.size();
  LinearMap m = LinearMap::zero(a.field(), n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m.at(i, j) = a.at(i, j);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m.at(a.size() + i, a.size() + j) = b.at(i, j);
  }
  return m;
}

// --------------------------------------------------------------- LieAlgebra --

LieAlgebra::LieAlgebra(FieldRef field, std::size_t dim, std::vector<Vec> table)
    : field_(std::move(field)), dim_(dim), table_(std::move(table)) {}

LieAlgebra LieAlgebra::make(FieldRef field, std::size_t dim, std::vector<std::vector<Vec>> table) {
  if (!field) throw InvalidArgument("algebra without a field");
  if (dim == 0) throw InvalidArgument("algebra dimension must be positive");
  if (table.size() != dim) throw InvalidArgument("bracket table has the wrong number of rows");
  std::vector<Vec> flat;
  flat.reserve(dim * dim);
  for (auto& row : table) {
    if (row.size() != dim) throw InvalidArgument("bracket table row has the wrong length");
    for (auto& v : row) {
      if (v.size() != dim) throw InvalidArgument("bracket value has the wrong length");
      for (const auto& x : v) require_same_field(*x.field(), *field);
      flat.push_back(std::move(v));
    }
  }
  LieAlgebra L(std::move(field), dim, std::move(flat));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      Vec sum = L.bracket(i, j);
      for (std::size_t k = 0; k < dim; ++k) sum[k] += L.bracket(j, i)[k];
      const bool ok = i == j ? is_zero_vec(L.bracket(i, i)) : is_zero_vec(sum);
      if (!ok) {
        throw LieAxiomError("antisymmetry violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                            {i + 1, j + 1});
      }
    }
  }
  // The Jacobiator is alternating once the bracket is, so i < j < k suffices.
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::size_t k = j + 1; k < dim; ++k) {
        const Vec ek = unit_vec(L.field_, dim, k);
        const Vec ei = unit_vec(L.field_, dim, i);
        const Vec ej = unit_vec(L.field_, dim, j);
        Vec jac = L.bracket(L.bracket(i, j), ek);
        const Vec b = L.bracket(L.bracket(j, k), ei);
        const Vec c = L.bracket(L.bracket(k, i), ej);
        for (std::size_t s = 0; s < dim; ++s) jac[s] += b[s] + c[s];
        if (!is_zero_vec(jac)) {
          throw LieAxiomError("Jacobi identity violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                  std::to_string(k + 1) + "): " + vec_string(jac),
                              {i + 1, j + 1, k + 1});
        }
      }
    }
  }
  return L;
}

LieAlgebra LieAlgebra::from_entries(FieldRef field, std::size_t dim, const std::vector<Entry>& entries) {
  if (!field) throw InvalidArgument("algebra without a field");
  std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, zero_vec(field, dim)));
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim) throw InvalidArgument("bracket entry index out of range");
    if (e.i >= e.j) throw InvalidArgument("bracket entries must have i < j");
    if (e.value.size() != dim) throw InvalidArgument("bracket value has the wrong length");
    table[e.i][e.j] = e.value;
    Vec neg;
    for (const auto& x : e.value) neg.push_back(-x);
    table[e.j][e.i] = std::move(neg);
  }
  return make(std::move(field), dim, std::move(table));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InvalidArgument("vector length does not match the algebra");
  Vec out = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], bracket(i, j));
    }
  }
  return out;
}

std::vector<LieAlgebra::Entry> LieAlgebra::entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (!is_zero_vec(bracket(i, j))) out.push_back({i, j, bracket(i, j)});
    }
  }
  return out;
}

LinearMap LieAlgebra::ad(std::size_t i) const {
  LinearMap m = LinearMap::zero(field_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = bracket(i, j)[k];
  }
  return m;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  require_same_field(*a.field(), *b.field());
  const std::size_t n = a.dim() + b.dim();
  std::vector<LieAlgebra::Entry> entries;
  auto embed = [&](const Vec& v, std::size_t offset) {
    Vec out = zero_vec(a.field(), n);
    for (std::size_t k = 0; k < v.size(); ++k) out[offset + k] = v[k];
    return out;
  };
  for (const auto& e : a.entries()) entries.push_back({e.i, e.j, embed(e.value, 0)});
  for (const auto& e : b.entries()) entries.push_back({a.dim() + e.i, a.dim() + e.j, embed(e.value, a.dim())});
  return LieAlgebra::from_entries(a.field(), n, entries);
}

// ------------------------------------------------------------------ checks --

DerivationCheck is_derivation(const LieAlgebra& L, const LinearMap& D) {
  require_same_field(*L.field(), *D.field());
  if (D.size() != L.dim()) throw InvalidArgument("map dimension does not match the algebra");
  const std::size_t n = L.dim();
  std::vector<Vec> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(D.column(j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec lhs = D.apply(L.bracket(i, j));
      Vec rhs = L.bracket(images[i], unit_vec(L.field(), n, j));
      const Vec right = L.bracket(unit_vec(L.field(), n, i), images[j]);
      for (std::size_t k = 0; k < n; ++k) rhs[k] += right[k];
      if (lhs != rhs) return {false, std::make_pair(i, j)};
    }
  }
  return {};
}

std::vector<Vec> echelon_basis(std::vector<Vec> rows) {
  std::vector<Vec> out;
  if (rows.empty()) return out;
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const FqElem inv = rows[rank][col].inverse();
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      axpy(rows[r], -rows[r][col], rows[rank]);
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

NilpotencyReport nilpotency_class(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vec> term;
  for (std::size_t i = 0; i < n; ++i) term.push_back(unit_vec(L.field(), n, i));
  NilpotencyReport report{{n}, std::nullopt};
  while (true) {
    std::vector<Vec> brackets;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec ei = unit_vec(L.field(), n, i);
      for (const auto& b : term) {
        Vec v = L.bracket(ei, b);
        if (!is_zero_vec(v)) brackets.push_back(std::move(v));
      }
    }
    std::vector<Vec> next = echelon_basis(std::move(brackets));
    report.series_dims.push_back(next.size());
    if (next.empty()) {
      report.nil_class = static_cast<unsigned>(report.series_dims.size() - 1);
      return report;
    }
    if (next.size() == term.size()) return report;
    term = std::move(next);
  }
}

std::optional<std::uint64_t> map_order(const LinearMap& D, std::uint64_t cap) {
  if (cap < 1) throw InvalidArgument("order cap must be at least 1");
  if (D.rank() < D.size()) return std::nullopt;
  LinearMap power = D;
  for (std::uint64_t e = 1; e <= cap; ++e) {
    if (power.is_identity()) return e;
    if (e < cap) power = power * D;
  }
  return std::nullopt;
}

bool poly_annihilates(const FpPoly& r, const LinearMap& D) {
  const FieldRef& F = D.field();
  if (r.p() != F->p()) throw InvalidArgument("characteristic mismatch between polynomial and map");
  const LinearMap I = LinearMap::identity(F, D.size());
  LinearMap acc = LinearMap::zero(F, D.size());
  for (int i = r.degree(); i >= 0; --i) acc = acc * D + I.scaled(FqElem::from_int(F, r.coeffs()[i]));
  return acc.is_zero();
}

Vec characteristic_polynomial(const LinearMap& D) {
  const FieldRef& F = D.field();
  const std::size_t n = D.size();
  LinearMap H = D;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    const std::size_t r = c + 1;
    if (H.at(r, c).is_zero()) {
      std::size_t i = r + 1;
      while (i < n && H.at(i, c).is_zero()) ++i;
      if (i == n) continue;
      for (std::size_t j = 0; j < n; ++j) std::swap(H.at(i, j), H.at(r, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(H.at(j, i), H.at(j, r));
    }
    const FqElem inv = H.at(r, c).inverse();
    for (std::size_t i = r + 1; i < n; ++i) {
      if (H.at(i, c).is_zero()) continue;
      const FqElem u = H.at(i, c) * inv;
      for (std::size_t j = 0; j < n; ++j) H.at(i, j) -= u * H.at(r, j);
      for (std::size_t j = 0; j < n; ++j) H.at(j, r) += u * H.at(j, i);
    }
  }
  // p_{k+1} = (t - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
  std::vector<Vec> p{Vec{FqElem::one(F)}};
  for (std::size_t k = 0; k < n; ++k) {
    Vec next = zero_vec(F, k + 2);
    for (std::size_t s = 0; s <= k; ++s) {
      next[s + 1] += p[k][s];
      next[s] -= H.at(k, k) * p[k][s];
    }
    FqElem prod = FqElem::one(F);
    for (std::size_t i = k; i-- > 0;) {
      prod *= H.at(i + 1, i);
      if (prod.is_zero()) break;
      const FqElem coef = H.at(i, k) * prod;
      for (std::size_t s = 0; s < p[i].size(); ++s) next[s] -= coef * p[i][s];
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

}  // namespace derinv
