#include "derinv/shalev.hpp"

#include <numeric>
#include <unordered_set>

#include "derinv/errors.hpp"
#include "derinv/factor.hpp"
#include "derinv/invariants.hpp"
#include "derinv/kernels.hpp"

namespace derinv {

namespace {

void require_prime(std::uint32_t p) {
  if (!is_prime_u64(p)) throw InvalidArgument(std::to_string(p) + " is not a prime");
}

void require_n(unsigned n) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
}

FpPoly artin_schreier(std::uint32_t p) {
  std::vector<std::uint32_t> c(p + 1, 0);
  c[1] = p - 1;
  c[p] = 1;
  return FpPoly(p, std::move(c));
}

}  // namespace

FpPoly h_np(unsigned n, std::uint32_t p) {
  require_n(n);
  require_prime(p);
  const FpPoly f = FpPoly::x_pow_minus_one(p, n);
  FpPoly g = f.monic();
  for (std::uint32_t i = 1; i < p && g.degree() > 0; ++i) g = gcd(g, shift(f, i));
  return g;
}

ChainResult h_np_chain(unsigned n, std::uint32_t p) {
  require_n(n);
  require_prime(p);
  ChainResult out{FpPoly::x_pow_minus_one(p, n).monic(), 0};
  while (true) {
    FpPoly next = gcd(out.h, shift(out.h, 1));
    ++out.iterations;
    const bool stable = next.degree() == out.h.degree() || next.is_one();
    out.h = std::move(next);
    if (stable) return out;
  }
}

bool in_Bp(unsigned n, std::uint32_t p) { return !h_np(n, p).is_one(); }

Integer pp_element(const FpPoly& h) {
  if (h.degree() < 1) throw InvalidArgument("h must have degree at least 1");
  if (h.coeff(0) == 0) throw InvalidArgument("h(0) must be nonzero");
  return period(compose(h, artin_schreier(h.p())));
}

std::optional<FpPoly> decompose_artin_schreier(const FpPoly& f) {
  const std::uint32_t p = f.p();
  const FpPoly u = artin_schreier(p);
  // Digits of f in base u; f = h(u) iff every digit is constant.
  std::vector<std::uint32_t> digits;
  FpPoly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, u);
    if (r.degree() > 0) return std::nullopt;
    digits.push_back(r.coeff(0));
    rest = std::move(q);
  }
  return FpPoly(p, std::move(digits));
}

unsigned splitting_degree(const FpPoly& f) {
  if (f.degree() < 1) throw InvalidArgument("splitting degree of a constant");
  unsigned k = 1;
  for (const auto& fac : fp_factor(f)) k = std::lcm(k, static_cast<unsigned>(fac.factor.degree()));
  return k;
}

ArithFreeResult is_arith_free(const std::vector<FqElem>& X, const FieldRef& F, Exec exec) {
  for (const auto& x : X) require_same_field(*x.field(), *F);
  const std::unordered_set<FqElem, FqElemHash> members(X.begin(), X.end());
  const std::uint32_t p = F->p();
  auto progression_stays = [&](std::size_t i, std::size_t j) {
    FqElem term = X[i];
    for (std::uint32_t s = 1; s < p; ++s) {
      term += X[j];
      if (!members.contains(term)) return false;
    }
    return true;
  };
  const auto pair = exec == Exec::Parallel ? kernels::omp::find_progression_pair(X.size(), progression_stays)
                                           : kernels::serial::find_progression_pair(X.size(), progression_stays);
  ArithFreeResult out;
  if (pair) {
    out.free = false;
    out.counterexample.emplace(X[pair->first], X[pair->second]);
  }
  return out;
}

RootSet root_set(const FpPoly& f, std::optional<unsigned> k, unsigned cap_k) {
  const unsigned degree = k ? *k : splitting_degree(f);
  if (degree > cap_k) {
    throw DeskScaleExceeded("extension degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(cap_k));
  }
  FieldRef F = make_field(f.p(), degree);
  std::vector<FqElem> roots = fq_roots(f, F);
  return {std::move(F), std::move(roots)};
}

RootSet roots_of_unity(unsigned n, std::uint32_t p, unsigned cap_k) {
  require_n(n);
  require_prime(p);
  return root_set(FpPoly::x_pow_minus_one(p, n), std::nullopt, cap_k);
}

std::optional<Progression> find_progression(unsigned n, std::uint32_t p, unsigned cap_k) {
  const FpPoly h = h_np(n, p);
  if (h.is_one()) return std::nullopt;
  RootSet roots = root_set(h, std::nullopt, cap_k);
  if (roots.elems.empty()) throw InternalError("h_np has no root in its splitting field");
  Progression out{roots.elems.front(), FqElem::one(roots.field), roots.field};
  return out;
}

BpWitness bp_witness(unsigned n, std::uint32_t p, unsigned cap_k) {
  BpWitness w{n, p, h_np(n, p), std::nullopt};
  if (!w.h.is_one()) w.progression = find_progression(n, p, cap_k);
  check_witness(w);
  return w;
}

void check_witness(const BpWitness& w) {
  if (w.h.is_one() == w.progression.has_value()) throw InternalError("witness presence disagrees with h_np");
  if (!w.progression) return;
  const auto& [alpha, beta, F] = *w.progression;
  const Integer n = w.n;
  if (!alpha.pow(n).is_one() || !beta.pow(n).is_one()) throw InternalError("progression ends are not n-th roots of unity");
  FqElem term = alpha;
  for (std::uint32_t i = 0; i < w.p; ++i, term += beta) {
    if (!term.pow(n).is_one()) throw InternalError("progression leaves X_{n,p} at step " + std::to_string(i));
  }
}

bool char0_free(const IntPoly& r) {
  if (r.is_zero()) throw InvalidArgument("char0_free of the zero polynomial");
  return r.coeff(0) != 0;
}

std::vector<ScanRow> np_scan(const std::vector<std::pair<unsigned, std::uint32_t>>& pairs, Exec exec) {
  std::vector<ScanRow> rows(pairs.size());
  auto one_row = [&](std::size_t i) {
    const auto [n, p] = pairs[i];
    FpPoly h = h_np(n, p);
    rows[i] = ScanRow{n, p, !h.is_one(), std::move(h)};
  };
  if (exec == Exec::Parallel) {
    kernels::omp::for_each_row(pairs.size(), one_row);
  } else {
    kernels::serial::for_each_row(pairs.size(), one_row);
  }
  return rows;
}

std::vector<std::pair<unsigned, std::uint32_t>> scan_pairs(unsigned n_max, const std::vector<std::uint32_t>& primes) {
  for (auto p : primes) require_prime(p);
  std::vector<std::pair<unsigned, std::uint32_t>> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (!primes.empty()) {
      for (auto p : primes) out.emplace_back(n, p);
      continue;
    }
    for (const auto& [q, unused] : factor_int(rho(n)).factors) {
      if (!q.fits_ulong_p() || q.get_ui() > UINT32_MAX) {
        throw DeskScaleExceeded("prime divisor " + q.get_str() + " of rho(" + std::to_string(n) + ") is too large to scan");
      }
      out.emplace_back(n, static_cast<std::uint32_t>(q.get_ui()));
    }
  }
  return out;
}

}  // namespace derinv
