#pragma once

// Membership in B_p: gcds of shifted t^n - 1 over F_p, periods of
// h(t^p - t), and arithmetic progressions inside sets of roots of unity.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "derinv/ffield.hpp"

namespace derinv {

/// Default cap on the extension degree k of F_{p^k} used for root sets.
inline constexpr unsigned kDefaultCapK = 24;

enum class Exec { Serial, Parallel };

/// Monic gcd of (t+i)^n - 1 for i = 0..p-1 over F_p.
FpPoly h_np(unsigned n, std::uint32_t p);

struct ChainResult {
  FpPoly h;
  unsigned iterations = 0;
};

/// H_0 = t^n - 1, H_i = gcd(H_{i-1}(t), H_{i-1}(t+1)); stops once the
/// degree no longer drops or H_i = 1.
ChainResult h_np_chain(unsigned n, std::uint32_t p);

/// n is in B_p iff h_np(n, p) != 1.
bool in_Bp(unsigned n, std::uint32_t p);

/// per(h(t^p - t)).
Integer pp_element(const FpPoly& h);

/// h with f = h(t^p - t), if f has that shape.
std::optional<FpPoly> decompose_artin_schreier(const FpPoly& f);

/// lcm of the degrees of the irreducible factors of f.
unsigned splitting_degree(const FpPoly& f);

struct ArithFreeResult {
  bool free = true;
  /// (alpha, beta) with alpha + i*beta in X for all i < p.
  std::optional<std::pair<FqElem, FqElem>> counterexample;
};

/// Brute force over ordered pairs of X; the first counterexample in index
/// order is reported.
ArithFreeResult is_arith_free(const std::vector<FqElem>& X, const FieldRef& F, Exec exec = Exec::Parallel);

struct RootSet {
  FieldRef field;
  std::vector<FqElem> elems;
};

/// Distinct roots of f in F_{p^k}, k = splitting_degree(f) unless given.
/// Throws DeskScaleExceeded when k > cap_k.
RootSet root_set(const FpPoly& f, std::optional<unsigned> k = std::nullopt, unsigned cap_k = kDefaultCapK);

/// X_{n,p}: the n-th roots of unity over F_p, in their splitting field.
RootSet roots_of_unity(unsigned n, std::uint32_t p, unsigned cap_k = kDefaultCapK);

struct Progression {
  FqElem alpha;
  FqElem beta;
  FieldRef field;
};

/// alpha is a root of h_np(n, p) in its splitting field and beta = 1, so
/// alpha + i lies in X_{n,p} for every i. Empty iff n is not in B_p.
std::optional<Progression> find_progression(unsigned n, std::uint32_t p, unsigned cap_k = kDefaultCapK);

struct BpWitness {
  unsigned n = 0;
  std::uint32_t p = 0;
  FpPoly h;
  std::optional<Progression> progression;
};

BpWitness bp_witness(unsigned n, std::uint32_t p, unsigned cap_k = kDefaultCapK);

/// Throws InternalError unless the witness invariants hold.
void check_witness(const BpWitness& w);

/// Arithmetic-freeness of the roots of r in characteristic zero: r(0) != 0.
bool char0_free(const IntPoly& r);

struct ScanRow {
  unsigned n = 0;
  std::uint32_t p = 0;
  bool member = false;
  FpPoly h;
};

/// Membership for every (n, p), rows in input order.
std::vector<ScanRow> np_scan(const std::vector<std::pair<unsigned, std::uint32_t>>& pairs, Exec exec = Exec::Parallel);

/// (n, p) for n in [1, n_max] and p over the prime divisors of rho(n), or
/// over `primes` when given.
std::vector<std::pair<unsigned, std::uint32_t>> scan_pairs(unsigned n_max, const std::vector<std::uint32_t>& primes = {});

}  // namespace derinv
