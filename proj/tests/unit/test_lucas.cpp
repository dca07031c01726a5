#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hk/lucas.hpp"
#include "hk/parse.hpp"

using namespace hk;

namespace {

const std::vector<std::string> XY = {"x", "y"};

RingPresentation ring2(std::uint32_t p,
                       std::initializer_list<const char*> jgens = {}) {
  Ambient amb{p, 2};
  std::vector<Poly> js;
  for (const char* s : jgens) js.push_back(parse_poly(s, amb, XY));
  return RingPresentation(PrimeChar(p), XY, std::move(js));
}

Poly C(const RingPresentation& r, std::int64_t c) {
  return Poly::constant(r.ambient(), c);
}

/// q-th Fibonacci number mod p, iteratively (F_1 = F_2 = 1).
std::uint32_t fib_mod(std::uint64_t n, std::uint32_t p) {
  std::uint32_t a = 0, b = 1 % p;  // F_0, F_1
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint32_t c = fp_add(a, b, p);
    a = b;
    b = c;
  }
  return a;  // F_n
}

}  // namespace

TEST_CASE("lucas_direct edge values") {
  auto r = ring2(3);
  // q = 1: B_1 = 1 (single term u=v=0), A_1 = 0 (empty sum)
  LucasPair lp = lucas_direct(C(r, -1), C(r, -1), 1, r);
  CHECK(lp.b_q == C(r, 1));
  CHECK(lp.a_q.is_zero());

  // a = 0, p = 2: q-1 odd forces u = 0 with no solution, so B_q = 0
  auto r2 = ring2(2);
  for (std::uint64_t q : {2ull, 4ull, 8ull, 16ull}) {
    LucasPair z = lucas_direct(C(r2, 0), C(r2, 1), q, r2);
    CHECK(z.b_q.is_zero());
  }

  // Fibonacci at q = 8: B_8 = F_8 = 21 mod p
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto rp = ring2(p);
    LucasPair f8 = lucas_direct(C(rp, -1), C(rp, -1), 8, rp,
                                /*cap=*/1 << 20);
    CHECK(f8.b_q == C(rp, 21));
  }

  // the cap guards the O(q) evaluation
  auto r5 = ring2(5);
  CHECK_THROWS_AS(lucas_direct(C(r5, -1), C(r5, -1), 25, r5, /*cap=*/5),
                  precondition_error);
}

TEST_CASE("lucas_pair spec values") {
  // idealization: a = b = 0 gives (A_q, B_q) = (0, 0) for q > 1
  auto r2 = ring2(2);
  LucasPair ideal = lucas_pair(C(r2, 0), C(r2, 0), 8, r2);
  CHECK(ideal.a_q.is_zero());
  CHECK(ideal.b_q.is_zero());

  // duplication-like: a = -1, b = 0 gives B_q = 1 for every q
  auto r3 = ring2(3);
  LucasPair dup = lucas_pair(C(r3, -1), C(r3, 0), 27, r3);
  CHECK(dup.b_q == C(r3, 1));
  CHECK(dup.a_q.is_zero());

  // Fibonacci with p = 5: B_q = F_q = 0 mod 5 at q = 5
  auto r5 = ring2(5);
  LucasPair fib5 = lucas_pair(C(r5, -1), C(r5, -1), 5, r5);
  CHECK(fib5.b_q.is_zero());

  CHECK_THROWS_AS(lucas_pair(C(r3, 1), C(r3, 1), 4, r3), precondition_error);
}

TEST_CASE("classify_bq") {
  auto r3 = ring2(3);
  CHECK(classify_bq(LucasPair{C(r3, 0), C(r3, 1), 2}, r3) == BqClass::UNIT);
  // a = b = -1, p = 5, q = 25: F_25 = 75025 = 0 mod 5
  auto r5 = ring2(5);
  LucasPair z = lucas_pair(C(r5, -1), C(r5, -1), 25, r5);
  CHECK(classify_bq(z, r5) == BqClass::ZERO);
  // a = b = -1, p = 3, q = 9: F_9 = 34 = 1 mod 3, a unit
  LucasPair u = lucas_pair(C(r3, -1), C(r3, -1), 9, r3);
  CHECK(u.b_q == C(r3, 1));
  CHECK(classify_bq(u, r3) == BqClass::UNIT);
  // non-scalar B_q that is neither zero nor a unit
  auto ra = ring2(3, {"x^3", "y^3"});
  LucasPair nn{C(ra, 0), parse_poly("x", ra.ambient(), XY), 3};
  CHECK(classify_bq(nn, ra) == BqClass::NONUNIT_NONZERO);
}

TEST_CASE("recurrence path matches the literal double sums") {
  std::mt19937_64 rng(53);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto r = ring2(p);
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    std::uint64_t p4 = static_cast<std::uint64_t>(p) * p * p * p;
    for (int pair = 0; pair < 10; ++pair) {
      Poly a = C(r, coeff(rng));
      Poly b = C(r, coeff(rng));
      for (std::uint64_t q = 1; q <= p4; q *= p) {
        LucasPair fast = lucas_pair(a, b, q, r);
        LucasPair slow = lucas_direct(a, b, q, r);
        CHECK(fast.a_q == slow.a_q);
        CHECK(fast.b_q == slow.b_q);
      }
    }
  }
}

TEST_CASE("recurrence path matches the sums for ring-element a, b") {
  // Non-scalar parameters over an Artinian quotient keep the polynomials
  // small while exercising the general path.
  std::mt19937_64 rng(59);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ring2(p, {"x^3", "y^3"});
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    auto rnd = [&] {
      return r.reduce(Poly::from_terms(
          r.ambient(),
          {{Monomial::one(2), coeff(rng)},
           {Monomial::var(2, 0), coeff(rng)},
           {Monomial::var(2, 1), coeff(rng)},
           {Monomial(std::vector<std::uint32_t>{1, 1}), coeff(rng)}}));
    };
    std::uint64_t p3 = static_cast<std::uint64_t>(p) * p * p;
    for (int pair = 0; pair < 6; ++pair) {
      Poly a = rnd(), b = rnd();
      for (std::uint64_t q = 1; q <= p3; q *= p) {
        LucasPair fast = lucas_pair(a, b, q, r);
        LucasPair slow = lucas_direct(a, b, q, r);
        CHECK(fast.a_q == slow.a_q);
        CHECK(fast.b_q == slow.b_q);
      }
    }
  }
}

TEST_CASE("Fibonacci specialization: B_q = F_q and A_q = F_{q-1} at (-1,-1)") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto r = ring2(p);
    std::uint64_t p4 = static_cast<std::uint64_t>(p) * p * p * p;
    for (std::uint64_t q = 1; q <= p4; q *= p) {
      LucasPair lp = lucas_pair(C(r, -1), C(r, -1), q, r);
      CHECK(lp.b_q == C(r, fib_mod(q, p)));
      CHECK(lp.a_q == C(r, fib_mod(q - 1, p)));
    }
  }
}

TEST_CASE("B_1 = 1 and A_1 = 0 for arbitrary parameters") {
  std::mt19937_64 rng(61);
  auto r = ring2(5, {"x^4+y^4"});
  std::uniform_int_distribution<std::uint32_t> coeff(0, 4);
  for (int it = 0; it < 20; ++it) {
    Poly a = Poly::from_terms(
        r.ambient(), {{Monomial::one(2), coeff(rng)},
                      {Monomial::var(2, it % 2), coeff(rng)}});
    Poly b = Poly::from_terms(
        r.ambient(), {{Monomial::one(2), coeff(rng)},
                      {Monomial(std::vector<std::uint32_t>{1, 1}), coeff(rng)}});
    LucasPair lp = lucas_pair(a, b, 1, r);
    CHECK(lp.b_q == C(r, 1));
    CHECK(lp.a_q.is_zero());
  }
}
