#include "hk/lucas.hpp"

#include <vector>

namespace hk {

const char* to_string(BqClass c) {
  switch (c) {
    case BqClass::ZERO:
      return "ZERO";
    case BqClass::UNIT:
      return "UNIT";
    case BqClass::NONUNIT_NONZERO:
      return "NONUNIT_NONZERO";
  }
  return "?";
}

namespace {

void check_ambients(const Poly& a, const Poly& b,
                    const RingPresentation& ring) {
  if (!(a.ambient() == ring.ambient()) || !(b.ambient() == ring.ambient()))
    throw ambient_error("coefficients from a different ambient ring");
}

}  // namespace

LucasPair lucas_pair(const Poly& a, const Poly& b, std::uint64_t q,
                     const RingPresentation& ring) {
  check_ambients(a, b, ring);
  if (!is_p_power(q, ring.p()))
    throw precondition_error("q must be a power of the characteristic");
  const std::uint32_t p = ring.p();
  const Ambient amb = ring.ambient();

  if (a.is_constant() && b.is_constant()) {
    // Scalar recurrence in Z/p.
    std::uint32_t na = fp_neg(a.constant_term(), p);
    std::uint32_t nb = fp_neg(b.constant_term(), p);
    std::uint32_t s_prev2 = 0;       // s_{-1}
    std::uint32_t s_prev = 1 % p;    // s_0
    for (std::uint64_t n = 1; n + 1 <= q; ++n) {
      std::uint32_t s = fp_add(fp_mul(na, s_prev, p),
                               fp_mul(nb, s_prev2, p), p);
      s_prev2 = s_prev;
      s_prev = s;
    }
    // Now s_prev = s_{q-1}, s_prev2 = s_{q-2} (s_{-1} = 0 when q = 1).
    std::uint32_t bq = s_prev;
    std::uint32_t aq = fp_mul(nb, s_prev2, p);
    return LucasPair{Poly::constant(amb, aq), Poly::constant(amb, bq), q};
  }

  Poly na = ring.reduce(-a);
  Poly nb = ring.reduce(-b);
  Poly s_prev2 = Poly::zero(amb);
  Poly s_prev = Poly::constant(amb, 1);
  for (std::uint64_t n = 1; n + 1 <= q; ++n) {
    Poly s = ring.reduce(na * s_prev + nb * s_prev2);
    s_prev2 = std::move(s_prev);
    s_prev = std::move(s);
  }
  return LucasPair{ring.reduce(nb * s_prev2), std::move(s_prev), q};
}

LucasPair lucas_direct(const Poly& a, const Poly& b, std::uint64_t q,
                       const RingPresentation& ring, std::uint64_t cap) {
  check_ambients(a, b, ring);
  if (q == 0) throw precondition_error("q must be positive");
  const std::uint32_t p = ring.p();
  if (cap == 0) {
    cap = 1;
    for (int i = 0; i < 7; ++i) cap *= p;
  }
  if (q > cap)
    throw precondition_error("lucas_direct cap exceeded: q = " +
                             std::to_string(q));
  const Ambient amb = ring.ambient();
  Poly na = ring.reduce(-a);
  Poly nb = ring.reduce(-b);

  // Power tables of (-a) and (-b), reduced as they grow.
  std::vector<Poly> pa{Poly::constant(amb, 1)};
  std::vector<Poly> pb{Poly::constant(amb, 1)};
  auto pow_a = [&](std::uint64_t u) -> const Poly& {
    while (pa.size() <= u) pa.push_back(ring.reduce(pa.back() * na));
    return pa[u];
  };
  auto pow_b = [&](std::uint64_t v) -> const Poly& {
    while (pb.size() <= v) pb.push_back(ring.reduce(pb.back() * nb));
    return pb[v];
  };

  // B_q: sum over u + 2v = q-1.  A_q: sum over u + 2v = q-2, extra (-b).
  auto double_sum = [&](std::uint64_t target, std::uint64_t extra_b) -> Poly {
    Poly acc = Poly::zero(amb);
    for (std::uint64_t v = 0; 2 * v <= target; ++v) {
      std::uint64_t u = target - 2 * v;
      std::uint32_t binom = binom_mod_p(u + v, u, p);
      if (binom == 0) continue;
      Poly term = pow_a(u) * pow_b(v + extra_b);
      acc = ring.reduce(acc + term.scaled(binom));
    }
    return acc;
  };

  Poly bq = double_sum(q - 1, 0);
  Poly aq = (q >= 2) ? double_sum(q - 2, 1) : Poly::zero(amb);
  return LucasPair{std::move(aq), std::move(bq), q};
}

BqClass classify_bq(const LucasPair& pair, const RingPresentation& ring) {
  Poly nf = ring.reduce(pair.b_q);
  if (nf.is_zero()) return BqClass::ZERO;
  if (nf.constant_term() != 0) return BqClass::UNIT;
  return BqClass::NONUNIT_NONZERO;
}

}  // namespace hk
