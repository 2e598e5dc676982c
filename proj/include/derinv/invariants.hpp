#pragma once

// Integer invariants of t^n - 1 and of general integer polynomials.

#include <cstdint>
#include <string>

#include "derinv/factor.hpp"
#include "derinv/poly.hpp"

namespace derinv {

/// Res(t^n - 1, (t+1)^n - 1), with Phi_3 divided out of both when 6 | n.
Integer rho(unsigned n);

/// Determinant of the n x n circulant with first row C(n,0), ..., C(n,n-1).
Integer wendt(unsigned n);
/// Same determinant through the OpenMP elimination kernel.
Integer wendt_parallel(unsigned n);

/// a^(1+2d^2) (m-1)! prod_{i<j} (l_i - l_j)^(2m) over the distinct roots.
Integer delta(const IntPoly& r);

/// a^(2d^3) prod r(l_i + l_j) over ordered pairs (i, j) of distinct roots,
/// i = j included, skipping sums that are themselves roots.
Integer sigma(const IntPoly& r);

/// Closed form of Res(Phi_m, Phi_n) for m <= n.
Integer cyclo_resultant(unsigned m, unsigned n);
/// Res(Phi_m, Phi_n) evaluated directly.
Integer cyclo_resultant_direct(unsigned m, unsigned n);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);

enum class Theorem36Verdict { Abelian, ClassAtMost2, NoConclusion };

/// Classifies (n, p) by whether p divides rho(n); p = 0 is characteristic zero.
Theorem36Verdict theorem36_bound(unsigned n, std::uint32_t p);
/// Variant reusing an already computed rho(n).
Theorem36Verdict theorem36_bound(unsigned n, std::uint32_t p, const Integer& rho_n);

std::string to_string(Theorem36Verdict v);

}  // namespace derinv
