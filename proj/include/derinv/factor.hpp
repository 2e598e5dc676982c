#pragma once

// Integer factorization: trial division, Pollard rho (Brent), and
// Miller-Rabin / BPSW primality certification.

#include <utility>
#include <vector>

#include "derinv/poly.hpp"

namespace derinv {

struct Factorization {
  int sign = 1;
  /// (prime, exponent), ascending primes.
  std::vector<std::pair<Integer, unsigned>> factors;

  Integer value() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Deterministic Miller-Rabin below 3.3e24, BPSW above.
bool is_probable_prime(const Integer& n);

/// Complete signed factorization. Throws InvalidArgument for zero.
Factorization factor_int(const Integer& n);

/// One nontrivial factor of an odd composite n (Pollard rho, Brent variant).
Integer pollard_brent(const Integer& n, unsigned long seed = 1);

/// Renders "2^2 * 7", "-3 * 5^3", "1", "-1".
std::string to_string(const Factorization& f);

}  // namespace derinv
