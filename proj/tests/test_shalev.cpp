#include <doctest.h>

#include "derinv/errors.hpp"
#include "derinv/invariants.hpp"
#include "derinv/shalev.hpp"
#include "oracles.hpp"

using namespace derinv;

namespace {

FpPoly fp(const char* text, std::uint32_t p) { return parse_fp_poly(text, p); }

// n in B_p iff some alpha in the closure has (alpha + i)^n = 1 for all i.
// Searched exhaustively in F_{p^k} for every k up to `max_k`.
bool brute_member(unsigned n, std::uint32_t p, unsigned k) {
  const FieldRef F = make_field(p, k);
  const Integer e = n;
  for (const auto& a : oracle::all_elements(F)) {
    bool all = true;
    FqElem x = a;
    for (std::uint32_t i = 0; i < p && all; ++i, x += FqElem::one(F)) all = !x.is_zero() && x.pow(e).is_one();
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("h_np examples") {
  CHECK(h_np(3, 2) == fp("t^2+t+1", 2));
  CHECK(h_np(5, 2).is_one());
  CHECK(h_np(2, 3).is_one());
  CHECK_THROWS_AS(h_np(3, 4), InvalidArgument);
  CHECK_THROWS_AS(h_np(0, 2), InvalidArgument);
}

TEST_CASE("h_np_chain") {
  const auto a = h_np_chain(3, 2);
  CHECK(a.h == fp("t^2+t+1", 2));
  CHECK(a.iterations <= 2);
  const auto b = h_np_chain(5, 2);
  CHECK(b.h.is_one());
  CHECK(b.iterations <= 2);
  const auto c = h_np_chain(1, 2);
  CHECK(c.h == h_np(1, 2));
  CHECK(c.iterations <= 1);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (unsigned n = 1; n <= 20; ++n) CHECK(h_np_chain(n, p).h == h_np(n, p));
  }
}

TEST_CASE("in_Bp") {
  CHECK(in_Bp(3, 2));
  CHECK(in_Bp(8, 3));
  CHECK_FALSE(in_Bp(5, 2));
}

TEST_CASE("in_Bp against exhaustive search in small fields") {
  // Any root of h_np lies in F_{p^k} with k = splitting_degree(h_np).
  for (std::uint32_t p : {2U, 3U}) {
    for (unsigned n = 1; n <= 12; ++n) {
      const FpPoly h = h_np(n, p);
      const unsigned k = h.is_one() ? 1 : splitting_degree(h);
      if (k > 8) continue;
      CHECK(brute_member(n, p, k) == in_Bp(n, p));
    }
  }
}

TEST_CASE("h_np is shift invariant and of Artin-Schreier shape") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (unsigned n = 1; n <= 20; ++n) {
      const FpPoly h = h_np(n, p);
      CHECK(shift(h, 1) == h);
      const auto dec = decompose_artin_schreier(h);
      REQUIRE(dec.has_value());
      CHECK(compose(*dec, FpPoly(p, [p] {
                      std::vector<std::uint32_t> u(p + 1, 0);
                      u[1] = p - 1;
                      u[p] = 1;
                      return u;
                    }())) == h);
    }
  }
  CHECK_FALSE(decompose_artin_schreier(fp("t", 2)).has_value());
}

TEST_CASE("pp_element") {
  CHECK(pp_element(fp("t+1", 2)) == 3);
  CHECK(pp_element(fp("t^7+t+1", 2)) == 127);
  CHECK(pp_element(fp("1+t^2", 3)) == 8);
  CHECK_THROWS_AS(pp_element(fp("t", 2)), InvalidArgument);
  CHECK_THROWS_AS(pp_element(fp("1", 2)), InvalidArgument);
}

TEST_CASE("P_p elements generate members of B_p under multiples") {
  for (const char* h : {"t+1", "t^3+t+1", "t^5+t^2+1"}) {
    const Integer m = pp_element(fp(h, 2));
    for (unsigned mult = 1; mult <= 3; ++mult) CHECK(in_Bp(static_cast<unsigned>(m.get_ui()) * mult, 2));
  }
}

TEST_CASE("membership requires p | rho_n") {
  for (unsigned n = 1; n <= 12; ++n) {
    const Integer r = rho(n);
    for (std::uint32_t p = 2; p <= 50; ++p) {
      if (!is_prime_u64(p)) continue;
      if (in_Bp(n, p)) CHECK(r % p == 0);
    }
  }
}

TEST_CASE("is_arith_free examples") {
  const FieldRef F4 = make_field(2, 2);
  const FqElem w = FqElem::generator(F4);
  const std::vector<FqElem> cube_roots{FqElem::one(F4), w, w * w};
  const auto r = is_arith_free(cube_roots, F4);
  CHECK_FALSE(r.free);
  REQUIRE(r.counterexample.has_value());
  const auto& [alpha, beta] = *r.counterexample;
  CHECK((alpha + beta).pow(3).is_one());

  const RootSet fifth = roots_of_unity(5, 2);
  CHECK(fifth.field->k() == 4);
  CHECK(is_arith_free(fifth.elems, fifth.field).free);

  const std::vector<FqElem> with_zero{FqElem::zero(F4), w};
  const auto z = is_arith_free(with_zero, F4);
  CHECK_FALSE(z.free);
  CHECK(z.counterexample->first.is_zero());
  CHECK(z.counterexample->second.is_zero());

  CHECK_THROWS_AS(is_arith_free({FqElem::one(make_field(3, 1))}, F4), InvalidArgument);
}

TEST_CASE("serial and parallel progression search agree") {
  for (std::uint32_t p : {2U, 3U}) {
    for (unsigned n = 1; n <= 15; ++n) {
      const RootSet X = roots_of_unity(n, p);
      const auto a = is_arith_free(X.elems, X.field, Exec::Serial);
      const auto b = is_arith_free(X.elems, X.field, Exec::Parallel);
      CHECK(a.free == b.free);
      if (!a.free) {
        CHECK(a.counterexample->first == b.counterexample->first);
        CHECK(a.counterexample->second == b.counterexample->second);
      }
    }
  }
}

TEST_CASE("find_progression and witnesses") {
  const auto a = find_progression(3, 2);
  REQUIRE(a.has_value());
  CHECK(a->field->k() == 2);
  CHECK(a->beta.is_one());
  CHECK_FALSE(find_progression(5, 2).has_value());
  const auto b = find_progression(8, 3);
  REQUIRE(b.has_value());
  for (std::uint32_t i = 0; i < 3; ++i) CHECK((b->alpha + FqElem::from_int(b->field, i)).pow(8).is_one());
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    for (unsigned n = 1; n <= 20; ++n) CHECK_NOTHROW(bp_witness(n, p));
  }
}

TEST_CASE("splitting field cap") {
  CHECK_THROWS_AS(roots_of_unity(19, 2, 10), DeskScaleExceeded);
  CHECK(roots_of_unity(19, 2).elems.size() == 19);
}

TEST_CASE("char0_free") {
  CHECK(char0_free(IntPoly::x_pow_minus_one(7)));
  CHECK_FALSE(char0_free(IntPoly{0, 1, 1}));
  CHECK(char0_free(IntPoly{5}));
  CHECK_THROWS_AS(char0_free(IntPoly{}), InvalidArgument);
}

TEST_CASE("np_scan rows keep input order") {
  const auto pairs = scan_pairs(12);
  const auto serial = np_scan(pairs, Exec::Serial);
  const auto parallel = np_scan(pairs, Exec::Parallel);
  REQUIRE(serial.size() == pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CHECK(serial[i].n == pairs[i].first);
    CHECK(serial[i].p == pairs[i].second);
    CHECK(serial[i].member == parallel[i].member);
  }
}
