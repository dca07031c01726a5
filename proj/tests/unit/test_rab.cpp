#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hk/parse.hpp"
#include "hk/rab.hpp"

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

RabSpec spec_of(const RingPresentation& r,
                std::initializer_list<const char*> igens, std::int64_t a,
                std::int64_t b) {
  std::vector<Poly> gs;
  for (const char* s : igens)
    gs.push_back(parse_poly(s, r.ambient(), r.var_names()));
  return RabSpec(r, IdealHandle(r, std::move(gs)),
                 Poly::constant(r.ambient(), a),
                 Poly::constant(r.ambient(), b));
}

Poly P(const RingPresentation& r, const std::string& s) {
  return parse_poly(s, r.ambient(), r.var_names());
}

/// Random element r + it with i a random combination of I's generators.
RabElement random_element(std::mt19937_64& rng, const RabSpec& spec) {
  const RingPresentation& ring = spec.ring();
  std::uniform_int_distribution<std::uint32_t> coeff(0, ring.p() - 1);
  std::uniform_int_distribution<std::uint32_t> exp(0, 2);
  auto rnd_poly = [&] {
    return Poly::from_terms(
        ring.ambient(),
        {{Monomial::one(2), coeff(rng)},
         {Monomial(std::vector<std::uint32_t>{exp(rng), exp(rng)}),
          coeff(rng)}});
  };
  Poly r = rnd_poly();
  Poly i = Poly::zero(ring.ambient());
  for (const auto& g : spec.ideal().gens()) i = i + g * rnd_poly();
  return RabElement(spec, r, i);
}

}  // namespace

TEST_CASE("spec validation") {
  auto r = ring2(3);
  CHECK_NOTHROW(spec_of(r, {"x"}, -1, 0));
  // I = R rejected
  CHECK_THROWS_AS(spec_of(r, {"x+1"}, 0, 0), precondition_error);
  // I = 0 rejected
  auto rj = ring2(3, {"x^2"});
  CHECK_THROWS_AS(spec_of(rj, {"x^2"}, 0, 0), precondition_error);
}

TEST_CASE("element construction certifies membership") {
  auto r = ring2(3);
  RabSpec s = spec_of(r, {"x"}, -1, 0);
  CHECK_NOTHROW(RabElement(s, P(r, "1+y"), P(r, "x^2+2*x*y")));
  CHECK_THROWS_AS(RabElement(s, P(r, "0"), P(r, "y")), precondition_error);
}

TEST_CASE("rab_mul spec examples") {
  auto r = ring2(3);
  // identity
  RabSpec dup = spec_of(r, {"x", "y"}, -1, 0);
  RabElement e = RabElement(dup, P(r, "x+1"), P(r, "x^2+y"));
  CHECK(rab_mul(RabElement::one(dup), e, dup) == e);

  // idealization squares to zero on the t-part
  RabSpec ide = spec_of(r, {"x", "y"}, 0, 0);
  RabElement xt(ide, P(r, "0"), P(r, "x"));
  RabElement yt(ide, P(r, "0"), P(r, "y"));
  CHECK(rab_mul(xt, yt, ide) == RabElement::zero(ide));

  // duplication: (0+xt)(0+yt) = 0 + xy t
  RabElement xd(dup, P(r, "0"), P(r, "x"));
  RabElement yd(dup, P(r, "0"), P(r, "y"));
  RabElement prod = rab_mul(xd, yd, dup);
  CHECK(prod.r().is_zero());
  CHECK(prod.i() == P(r, "x*y"));
}

TEST_CASE("rab_mul follows the displayed rule") {
  // (r+it)(s+jt) = rs - bij + (rj + si - aij)t componentwise
  auto r = ring2(5);
  RabSpec s = spec_of(r, {"x", "y"}, 2, 3);
  RabElement u(s, P(r, "1+x"), P(r, "2*x"));
  RabElement v(s, P(r, "y"), P(r, "x+y"));
  RabElement w = rab_mul(u, v, s);
  Poly ij = P(r, "2*x") * P(r, "x+y");
  CHECK(w.r() == r.reduce(P(r, "1+x") * P(r, "y") - P(r, "3") * ij));
  CHECK(w.i() == r.reduce(P(r, "1+x") * P(r, "x+y") + P(r, "y") * P(r, "2*x") -
                          P(r, "2") * ij));
}

TEST_CASE("rab_pow_closed spec examples") {
  auto r = ring2(5);
  // n = 2 in the duplication: (r+it)^2 = r^2 + (2ri + i^2) t
  RabSpec dup = spec_of(r, {"x"}, -1, 0);
  RabElement e(dup, P(r, "y"), P(r, "x"));
  RabElement sq = rab_pow_closed(e, 2, dup);
  CHECK(sq.r() == P(r, "y^2"));
  CHECK(sq.i() == r.reduce(P(r, "2*x*y+x^2")));

  // n = 0 is the identity element
  CHECK(rab_pow_closed(e, 0, dup) == RabElement::one(dup));

  // n = q = p^e collapses to r^q + A_q i^q + B_q i^q t
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto rp = ring2(p);
    for (std::int64_t a : {0ll, -1ll})
      for (std::int64_t b : {0ll, -1ll}) {
        RabSpec s = spec_of(rp, {"x", "y"}, a, b);
        LucasPair lp = lucas_pair(Poly::constant(rp.ambient(), a),
                                  Poly::constant(rp.ambient(), b), p * p, rp);
        RabElement x(s, P(rp, "1+y"), P(rp, "x+2*y"));
        RabElement xq = rab_pow_closed(x, p * p, s);
        Poly iq = x.i().frobenius(p * p);
        CHECK(xq.r() == rp.reduce(x.r().frobenius(p * p) + lp.a_q * iq));
        CHECK(xq.i() == rp.reduce(lp.b_q * iq));
      }
  }
}

TEST_CASE("rab_pow_iter basics and the Fibonacci cube") {
  auto r = ring2(5);
  RabSpec fib = spec_of(r, {"x", "y"}, -1, -1);
  RabElement x(fib, P(r, "y+1"), P(r, "x"));
  CHECK(rab_pow_iter(x, 1, fib) == x);

  //  (0 + it)^3 = F_2 i^3 + F_3 i^3 t = i^3 + 2 i^3 t
  RabElement it(fib, P(r, "0"), P(r, "x"));
  RabElement cube = rab_pow_iter(it, 3, fib);
  CHECK(cube.r() == P(r, "x^3"));
  CHECK(cube.i() == P(r, "2*x^3"));
  CHECK(rab_pow_closed(it, 3, fib) == cube);
}

TEST_CASE("closed power formula agrees with iterated squaring") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<std::uint64_t> nd(0, 30);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = ring2(p);
    const Ambient amb = r.ambient();
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    // scalar and non-scalar (a, b) pairs
    std::vector<std::pair<Poly, Poly>> params = {
        {Poly::constant(amb, coeff(rng)), Poly::constant(amb, coeff(rng))},
        {P(r, "x+1"), P(r, "y")},
    };
    for (const auto& [a, b] : params) {
      RabSpec s(r, IdealHandle(r, {P(r, "x"), P(r, "y")}), a, b);
      for (int it = 0; it < 100; ++it) {
        RabElement x = random_element(rng, s);
        std::uint64_t n = nd(rng);
        CHECK(rab_pow_closed(x, n, s) == rab_pow_iter(x, n, s));
      }
    }
  }
}

TEST_CASE("ring axioms for rab_mul") {
  std::mt19937_64 rng(71);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = ring2(p, {"x^3+y^3"});
    RabSpec s = spec_of(r, {"x"}, -1, -1);
    for (int it = 0; it < 50; ++it) {
      RabElement x = random_element(rng, s);
      RabElement y = random_element(rng, s);
      RabElement z = random_element(rng, s);
      CHECK(rab_mul(x, y, s) == rab_mul(y, x, s));
      CHECK(rab_mul(rab_mul(x, y, s), z, s) == rab_mul(x, rab_mul(y, z, s), s));
      CHECK(rab_mul(x, rab_add(y, z, s), s) ==
            rab_add(rab_mul(x, y, s), rab_mul(x, z, s), s));
    }
  }
}

TEST_CASE("Frobenius powers of elements match the Lucas coefficients") {
  std::mt19937_64 rng(73);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ring2(p);
    for (std::int64_t a : {0ll, -1ll, 1ll})
      for (std::int64_t b : {0ll, -1ll}) {
        RabSpec s = spec_of(r, {"x", "y^2"}, a, b);
        LucasPair lp =
            lucas_pair(Poly::constant(r.ambient(), a),
                       Poly::constant(r.ambient(), b), p * p, r);
        for (int it = 0; it < 10; ++it) {
          RabElement x = random_element(rng, s);
          RabElement xq = rab_pow_iter(x, p * p, s);
          Poly iq = x.i().frobenius(p * p);
          CHECK(xq.r() == r.reduce(x.r().frobenius(p * p) + lp.a_q * iq));
          CHECK(xq.i() == r.reduce(lp.b_q * iq));
        }
      }
  }
}

TEST_CASE("Frobenius composition: ((x)^p)^p = x^{p^2}") {
  std::mt19937_64 rng(83);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = ring2(p);
    RabSpec s = spec_of(r, {"x", "y"}, -1, -1);
    for (int it = 0; it < 20; ++it) {
      RabElement x = random_element(rng, s);
      RabElement twice = rab_pow_iter(rab_pow_iter(x, p, s), p, s);
      CHECK(twice == rab_pow_iter(x, static_cast<std::uint64_t>(p) * p, s));
      CHECK(twice == rab_pow_closed(x, static_cast<std::uint64_t>(p) * p, s));
    }
  }
}

TEST_CASE("rab_frobenius_gens") {
  auto r = ring2(3);
  // q = 1: the generators of n itself
  RabSpec dup = spec_of(r, {"x^2", "y^2"}, -1, 0);
  auto g1 = rab_frobenius_gens(dup, 1);
  REQUIRE(g1.size() == 4);
  CHECK(g1[0] == RabElement::unchecked(dup, P(r, "x"), P(r, "0")));
  CHECK(g1[1] == RabElement::unchecked(dup, P(r, "y"), P(r, "0")));
  CHECK(g1[2] == RabElement::unchecked(dup, P(r, "0"), P(r, "x^2")));
  CHECK(g1[3] == RabElement::unchecked(dup, P(r, "0"), P(r, "y^2")));

  // idealization at q = p: the second family collapses to zero
  RabSpec ide = spec_of(r, {"x"}, 0, 0);
  auto gi = rab_frobenius_gens(ide, 3);
  REQUIRE(gi.size() == 3);
  CHECK(gi[2] == RabElement::zero(ide));

  // duplication at q = p: second family is i^q t
  auto gd = rab_frobenius_gens(spec_of(r, {"x"}, -1, 0), 3);
  REQUIRE(gd.size() == 3);
  CHECK(gd[2].r().is_zero());
  CHECK(gd[2].i() == P(r, "x^3"));

  CHECK_THROWS_AS(rab_frobenius_gens(dup, 2), precondition_error);
}

TEST_CASE("products of n^[q] generators stay in m^[q]I + B_q I^[q]") {
  std::mt19937_64 rng(79);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ring2(p, {"x^3+y^3"});
    RabSpec s = spec_of(r, {"x"}, -1, -1);
    std::uint64_t q = p * p;
    LucasPair lp = lucas_pair(s.a(), s.b(), q, r);
    IdealHandle mqI = ideal_product(
        frobenius_power(IdealHandle::maximal(r), q), s.ideal());
    IdealHandle iq = frobenius_power(s.ideal(), q);
    std::vector<Poly> span_gens = mqI.gens();
    for (const auto& g : iq.gens()) span_gens.push_back(lp.b_q * g);
    IdealHandle target(r, span_gens);
    for (const auto& gen : rab_frobenius_gens(s, q)) {
      for (int it = 0; it < 5; ++it) {
        RabElement x = random_element(rng, s);
        RabElement prod = rab_mul(gen, x, s);
        CHECK(in_ideal(prod.i(), target));
      }
    }
  }
}
