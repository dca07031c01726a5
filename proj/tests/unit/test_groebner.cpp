#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hk/groebner.hpp"
#include "hk/parse.hpp"

using namespace hk;

namespace {

const std::vector<std::string> XY = {"x", "y"};

Poly P(const std::string& s, std::uint32_t p) {
  return parse_poly(s, Ambient{p, 2}, XY);
}

std::vector<Poly> gens(std::uint32_t p, std::initializer_list<const char*> ss) {
  std::vector<Poly> out;
  for (const char* s : ss) out.push_back(P(s, p));
  return out;
}

bool same_set(const std::vector<Poly>& a, std::vector<Poly> b) {
  if (a.size() != b.size()) return false;
  for (const auto& f : a) {
    auto it = std::find(b.begin(), b.end(), f);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

/// Brute-force standard monomial count: walk the full box bounded by the
/// pure powers and test divisibility cell by cell. Oracle for kdim_quotient.
LengthValue kdim_by_box_walk(const MonomialIdeal& M) {
  std::uint32_t n = M.nvars();
  if (M.is_unit()) return LengthValue(0);
  std::vector<std::uint32_t> box(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    bool bounded = false;
    for (const auto& g : M.min_gens())
      if (g.is_pure_power_of(v)) {
        box[v] = bounded ? std::min(box[v], g[v]) : g[v];
        bounded = true;
      }
    if (!bounded) return LengthValue::infinite();
  }
  std::uint64_t count = 0;
  std::vector<std::uint32_t> idx(n, 0);
  while (true) {
    if (!M.contains(Monomial(idx))) ++count;
    std::uint32_t v = n;
    for (; v-- > 0;) {
      if (++idx[v] < box[v]) break;
      idx[v] = 0;
    }
    if (v == static_cast<std::uint32_t>(-1)) break;
  }
  return LengthValue(count);
}

MonomialIdeal mono_ideal(std::initializer_list<std::vector<std::uint32_t>> gs) {
  std::vector<Monomial> ms;
  std::uint32_t n = 0;
  for (const auto& e : gs) {
    n = static_cast<std::uint32_t>(e.size());
    ms.push_back(Monomial(e));
  }
  return MonomialIdeal(n, std::move(ms));
}

}  // namespace

TEST_CASE("normal_form spec examples") {
  auto lex = MonomialOrder::lex(2);
  GroebnerBasis G2 = reduced_gb(gens(2, {"y^4", "x^3+y^3", "x*y^3"}), lex);
  CHECK(normal_form(P("x^4", 2), G2).is_zero());
  CHECK(normal_form(P("x^2*y^3", 2), G2).is_zero());
  Poly g = P("x^2+y", 5);
  CHECK(normal_form(g, reduced_gb({g}, lex)).is_zero());
  CHECK_THROWS_AS(normal_form(P("x", 3), G2), ambient_error);
}

TEST_CASE("reduced GB: nodal cubic with bracket powers (q = 4)") {
  // gens (x^3+y^3, x^4, y^4), p=2, lex x>y -> {y^4, x^3+y^3, x*y^3}
  auto lex = MonomialOrder::lex(2);
  GroebnerBasis G = reduced_gb(gens(2, {"x^3+y^3", "x^4", "y^4"}), lex);
  CHECK(same_set(G.elements(), gens(2, {"y^4", "x^3+y^3", "x*y^3"})));
}

TEST_CASE("reduced GB: quartic with bracket powers (q = 9)") {
  auto lex = MonomialOrder::lex(2);
  GroebnerBasis G = reduced_gb(
      gens(3, {"x^4+x^3*y+x^2*y^2+x*y^3+y^4", "x^9", "y^9"}), lex);
  CHECK(same_set(G.elements(),
                 gens(3, {"y^9", "x^4+x^3*y+x^2*y^2+x*y^3+y^4",
                          "x^3*y^6+x^2*y^7+x*y^8"})));
}

TEST_CASE("reduced GB: single generator and degenerate inputs") {
  auto grev = MonomialOrder::grevlex(2);
  GroebnerBasis G = reduced_gb({P("x", 7)}, grev);
  REQUIRE(G.elements().size() == 1);
  CHECK(G.elements()[0] == P("x", 7));
  // all-zero input: empty basis
  CHECK(reduced_gb({Poly::zero(Ambient{5, 2})}, grev).is_zero_ideal());
  // scaled generator comes out monic
  GroebnerBasis Gm = reduced_gb({P("3*x+3*y", 5)}, grev);
  CHECK(Gm.elements()[0] == P("x+y", 5));
}

TEST_CASE("initial ideal examples") {
  auto lex = MonomialOrder::lex(2);
  GroebnerBasis G = reduced_gb(gens(2, {"x^3+y^3", "x^4", "y^4"}), lex);
  CHECK(initial_ideal(G) ==
        mono_ideal({{0, 4}, {3, 0}, {1, 3}}));
  GroebnerBasis Gx = reduced_gb({P("x", 5)}, lex);
  CHECK(initial_ideal(Gx) == mono_ideal({{1, 0}}));
  GroebnerBasis G32 = reduced_gb(
      gens(3, {"x^4+x^3*y+x^2*y^2+x*y^3+y^4", "x^9", "y^9"}), lex);
  CHECK(initial_ideal(G32) == mono_ideal({{0, 9}, {4, 0}, {3, 6}}));
}

TEST_CASE("kdim_quotient examples and box-walk oracle") {
  CHECK(kdim_quotient(mono_ideal({{0, 4}, {3, 0}, {1, 3}})) ==
        LengthValue(10));  // 3q-2 at q=4
  CHECK(kdim_quotient(mono_ideal({{5, 0}, {0, 5}})) == LengthValue(25));
  CHECK(kdim_quotient(mono_ideal({{1, 0}})) == LengthValue::infinite());

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> exp(0, 6);
  std::uniform_int_distribution<int> ngens(1, 6);
  for (int it = 0; it < 200; ++it) {
    std::vector<Monomial> ms;
    // pure powers to bound the box, then random extra generators
    ms.push_back(Monomial(std::vector<std::uint32_t>{exp(rng) + 1, 0}));
    ms.push_back(Monomial(std::vector<std::uint32_t>{0, exp(rng) + 1}));
    int k = ngens(rng);
    for (int i = 0; i < k; ++i)
      ms.push_back(Monomial(std::vector<std::uint32_t>{exp(rng), exp(rng)}));
    MonomialIdeal M(2, ms);
    CHECK(kdim_quotient(M) == kdim_by_box_walk(M));
  }
  // and in 3 variables
  for (int it = 0; it < 60; ++it) {
    std::vector<Monomial> ms;
    for (std::uint32_t v = 0; v < 3; ++v) {
      std::vector<std::uint32_t> e(3, 0);
      e[v] = exp(rng) + 1;
      ms.push_back(Monomial(e));
    }
    int k = ngens(rng);
    for (int i = 0; i < k; ++i)
      ms.push_back(Monomial(
          std::vector<std::uint32_t>{exp(rng), exp(rng), exp(rng)}));
    MonomialIdeal M(3, ms);
    CHECK(kdim_quotient(M) == kdim_by_box_walk(M));
  }
}

TEST_CASE("krull_dim examples") {
  CHECK(krull_dim(mono_ideal({{3, 0}})) == 1);          // (x^3) in k[x,y]
  CHECK(krull_dim(mono_ideal({{4, 0}, {0, 4}})) == 0);  // m-primary
  CHECK(krull_dim(mono_ideal({{4, 0}})) == 1);          // initial of the quartic
  CHECK(krull_dim(MonomialIdeal(2, {})) == 2);          // zero ideal
  CHECK(krull_dim(mono_ideal({{1, 1}})) == 1);          // union of the axes
}

TEST_CASE("ideal membership: witness examples at p=3, q=3") {
  auto grev = MonomialOrder::grevlex(2);
  Poly w = P("x^6-y^6", 3);
  // member of I^[q] = ((x^2-y^2)^3)
  CHECK(ideal_membership(w, {P("x^2-y^2", 3).frobenius(3)}, grev));
  // not a member of m^[q]I = (x^4, x*y^3) for I = (x)
  CHECK_FALSE(ideal_membership(w, gens(3, {"x^4", "x*y^3"}), grev));
  CHECK(ideal_membership(Poly::zero(Ambient{3, 2}), gens(3, {"x"}), grev));
}

TEST_CASE("Buchberger criterion: S-polynomials of the basis reduce to zero") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint32_t> exp(0, 4);
  std::uniform_int_distribution<std::uint32_t> coeff(0, 4);
  std::uniform_int_distribution<int> nterms(1, 4);
  auto lex = MonomialOrder::lex(2);
  auto grev = MonomialOrder::grevlex(2);
  for (int it = 0; it < 40; ++it) {
    std::vector<Poly> gs;
    for (int i = 0; i < 3; ++i) {
      std::vector<std::pair<Monomial, std::int64_t>> ts;
      int k = nterms(rng);
      for (int t = 0; t < k; ++t)
        ts.emplace_back(Monomial(std::vector<std::uint32_t>{exp(rng), exp(rng)}),
                        coeff(rng));
      Poly f = Poly::from_terms(Ambient{5, 2}, ts);
      if (!f.is_zero()) gs.push_back(f);
    }
    if (gs.empty()) continue;
    for (const auto* ord : {&lex, &grev}) {
      GroebnerBasis G = reduced_gb(gs, *ord);
      for (std::size_t i = 0; i < G.elements().size(); ++i)
        for (std::size_t j = i + 1; j < G.elements().size(); ++j) {
          Poly s = s_polynomial(G.elements()[i], G.elements()[j], *ord);
          CHECK(normal_form(s, G).is_zero());
        }
      // generators are members
      for (const auto& g : gs) CHECK(normal_form(g, G).is_zero());
    }
  }
}

TEST_CASE("reduced GB in three variables: elementary symmetric ideal") {
  // lex x > y > z on (x+y+z, xy+xz+yz, xyz-1): the classic staircase
  // {x+y+z, y^2+yz+z^2, z^3-1}.
  const std::vector<std::string> XYZ = {"x", "y", "z"};
  Ambient amb{5, 3};
  auto Q = [&](const char* s) { return parse_poly(s, amb, XYZ); };
  GroebnerBasis G = reduced_gb(
      {Q("x+y+z"), Q("x*y+x*z+y*z"), Q("x*y*z-1")}, MonomialOrder::lex(3));
  CHECK(same_set(G.elements(),
                 {Q("x+y+z"), Q("y^2+y*z+z^2"), Q("z^3-1")}));
  // and the initial ideal has the expected finite staircase of length 6
  CHECK(kdim_quotient(initial_ideal(G)) == LengthValue(6));
}

TEST_CASE("reduced GB is independent of generator order") {
  auto lex = MonomialOrder::lex(2);
  std::vector<Poly> gs = gens(3, {"x^4+x^3*y+x^2*y^2+x*y^3+y^4", "x^9", "y^9"});
  GroebnerBasis G0 = reduced_gb(gs, lex);
  std::sort(gs.begin(), gs.end(),
            [](const Poly& a, const Poly& b) { return a.terms() < b.terms(); });
  do {
    GroebnerBasis G = reduced_gb(gs, lex);
    CHECK(G.elements() == G0.elements());
  } while (std::next_permutation(
      gs.begin(), gs.end(),
      [](const Poly& a, const Poly& b) { return a.terms() < b.terms(); }));
}

TEST_CASE("normal form is idempotent and linear") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::uint32_t> exp(0, 5);
  std::uniform_int_distribution<std::uint32_t> coeff(0, 2);
  std::uniform_int_distribution<int> nterms(0, 5);
  auto grev = MonomialOrder::grevlex(2);
  GroebnerBasis G = reduced_gb(gens(3, {"x^3+y^2", "y^4"}), grev);
  auto rnd = [&] {
    std::vector<std::pair<Monomial, std::int64_t>> ts;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t)
      ts.emplace_back(Monomial(std::vector<std::uint32_t>{exp(rng), exp(rng)}),
                      coeff(rng));
    return Poly::from_terms(Ambient{3, 2}, ts);
  };
  for (int it = 0; it < 100; ++it) {
    Poly f = rnd(), g = rnd();
    Poly nf = normal_form(f, G);
    CHECK(normal_form(nf, G) == nf);
    CHECK(normal_form(f + g, G) == normal_form(f, G) + normal_form(g, G));
  }
}

TEST_CASE("membership agrees with linear algebra on bounded spans") {
  // For an ideal containing (x^D, y^D), membership of f with deg < D in each
  // variable can be decided by the span of monomial multiples m*g that stay
  // within the 2D box. Compare against the Groebner route.
  const std::uint32_t p = 3, D = 4;
  std::vector<Poly> gs = gens(p, {"x^4", "y^4", "x^2+2*y^3"});
  auto grev = MonomialOrder::grevlex(2);

  // Build the span of all m*g with m in the 2D x 2D box, as vectors over the
  // monomial basis of that box.
  std::vector<std::vector<std::uint32_t>> rows;
  auto vec_of = [&](const Poly& f) {
    std::vector<std::uint32_t> v(4 * D * D, 0);
    for (const auto& [m, c] : f.terms()) {
      REQUIRE(m[0] < 2 * D);
      REQUIRE(m[1] < 2 * D);
      v[m[0] * 2 * D + m[1]] = c;
    }
    return v;
  };
  for (const auto& g : gs)
    for (std::uint32_t i = 0; i < D; ++i)
      for (std::uint32_t j = 0; j < D; ++j)
        rows.push_back(vec_of(
            g.mul_term(Monomial(std::vector<std::uint32_t>{i, j}), 1)));
  auto rank_of = [&](std::vector<std::vector<std::uint32_t>> m) {
    std::uint32_t rank = 0;
    std::size_t w = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < w && rank < m.size(); ++col) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][col] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[rank], m[piv]);
      std::uint32_t inv = fp_inv(m[rank][col], p);
      for (auto& x : m[rank]) x = fp_mul(x, inv, p);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == rank || m[r][col] == 0) continue;
        std::uint32_t c = m[r][col];
        for (std::size_t k = 0; k < w; ++k)
          m[r][k] = fp_sub(m[r][k], fp_mul(c, m[rank][k], p), p);
      }
      ++rank;
    }
    return rank;
  };
  std::uint32_t base_rank = rank_of(rows);

  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::uint32_t> exp(0, D - 1);
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  for (int it = 0; it < 40; ++it) {
    std::vector<std::pair<Monomial, std::int64_t>> ts;
    for (int t = 0; t < 3; ++t)
      ts.emplace_back(Monomial(std::vector<std::uint32_t>{exp(rng), exp(rng)}),
                      coeff(rng));
    Poly f = Poly::from_terms(Ambient{p, 2}, ts);
    bool by_gb = ideal_membership(f, gs, grev);
    // f is in the ideal iff adding it to the bounded span does not raise the
    // rank. Degrees stay below D so no product with m in the box escapes.
    auto rows2 = rows;
    rows2.push_back(vec_of(f));
    bool by_rank = rank_of(rows2) == base_rank;
    CHECK(by_gb == by_rank);
  }
}
