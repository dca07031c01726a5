#include "hk/rab.hpp"

namespace hk {

RabSpec::RabSpec(RingPresentation ring, IdealHandle ideal, Poly a, Poly b)
    : ring_(std::move(ring)),
      ideal_(std::move(ideal)),
      a_(ring_.reduce(a)),
      b_(ring_.reduce(b)),
      igb_(reduced_gb(ideal_.gens_with_j(),
                      MonomialOrder::grevlex(ring_.nvars()))) {
  if (!(ideal_.ring() == ring_))
    throw ambient_error("ideal over a different ring");
  if (!ideal_.is_nonzero())
    throw precondition_error("I must be a nonzero ideal");
  if (!ideal_.is_proper())
    throw precondition_error("I must be a proper ideal (I != R)");
}

RabElement::RabElement(const RabSpec& spec, Poly r, Poly i) {
  r_ = spec.ring().reduce(r);
  i_ = spec.ring().reduce(i);
  if (!normal_form(i_, spec.ideal_groebner()).is_zero())
    throw precondition_error("t-coefficient does not lie in I");
}

RabElement RabElement::unchecked(const RabSpec& spec, Poly r, Poly i) {
  RabElement x;
  x.r_ = spec.ring().reduce(r);
  x.i_ = spec.ring().reduce(i);
  return x;
}

RabElement RabElement::one(const RabSpec& spec) {
  return unchecked(spec, Poly::constant(spec.ring().ambient(), 1),
                   Poly::zero(spec.ring().ambient()));
}

RabElement RabElement::zero(const RabSpec& spec) {
  const Ambient amb = spec.ring().ambient();
  return unchecked(spec, Poly::zero(amb), Poly::zero(amb));
}

RabElement rab_mul(const RabElement& x, const RabElement& y,
                   const RabSpec& spec) {
  const Poly& r = x.r();
  const Poly& i = x.i();
  const Poly& s = y.r();
  const Poly& j = y.i();
  Poly ij = i * j;
  Poly first = r * s - spec.b() * ij;
  Poly second = r * j + s * i - spec.a() * ij;
  return RabElement::unchecked(spec, std::move(first), std::move(second));
}

RabElement rab_add(const RabElement& x, const RabElement& y,
                   const RabSpec& spec) {
  return RabElement::unchecked(spec, x.r() + y.r(), x.i() + y.i());
}

RabElement rab_pow_iter(const RabElement& x, std::uint64_t n,
                        const RabSpec& spec) {
  RabElement result = RabElement::one(spec);
  RabElement base = x;
  while (n > 0) {
    if (n & 1) result = rab_mul(result, base, spec);
    if (n > 1) base = rab_mul(base, base, spec);
    n >>= 1;
  }
  return result;
}

RabElement rab_pow_closed(const RabElement& x, std::uint64_t n,
                          const RabSpec& spec) {
  const RingPresentation& ring = spec.ring();
  const std::uint32_t p = ring.p();
  const Ambient amb = ring.ambient();
  if (n == 0) return RabElement::one(spec);

  Poly na = ring.reduce(-spec.a());
  Poly nb = ring.reduce(-spec.b());

  // Power tables, normal forms at every step.
  auto table = [&](const Poly& base, std::uint64_t upto) {
    std::vector<Poly> t{Poly::constant(amb, 1)};
    for (std::uint64_t k = 1; k <= upto; ++k)
      t.push_back(ring.reduce(t.back() * base));
    return t;
  };
  std::vector<Poly> ipow = table(x.i(), n);
  std::vector<Poly> rpow = table(x.r(), n);
  std::vector<Poly> apow = table(na, n);
  std::vector<Poly> bpow = table(nb, n / 2 + 2);

  // first  = r^n + sum_{j=2}^n C(n,j) sum_{u+2v=j-2} C(u+v,u)
  //                  (-a)^u (-b)^{v+1} i^j r^{n-j}
  // second = sum_{j=1}^n C(n,j) sum_{u+2v=j-1} C(u+v,u)
  //                  (-a)^u (-b)^v i^j r^{n-j}
  Poly first = rpow[n];
  Poly second = Poly::zero(amb);
  for (std::uint64_t j = 1; j <= n; ++j) {
    std::uint32_t cnj = binom_mod_p(n, j, p);
    if (cnj == 0) continue;
    Poly inner_first = Poly::zero(amb);
    if (j >= 2) {
      for (std::uint64_t v = 0; 2 * v <= j - 2; ++v) {
        std::uint64_t u = j - 2 - 2 * v;
        std::uint32_t c = binom_mod_p(u + v, u, p);
        if (c == 0) continue;
        inner_first =
            ring.reduce(inner_first + (apow[u] * bpow[v + 1]).scaled(c));
      }
    }
    Poly inner_second = Poly::zero(amb);
    for (std::uint64_t v = 0; 2 * v <= j - 1; ++v) {
      std::uint64_t u = j - 1 - 2 * v;
      std::uint32_t c = binom_mod_p(u + v, u, p);
      if (c == 0) continue;
      inner_second = ring.reduce(inner_second + (apow[u] * bpow[v]).scaled(c));
    }
    Poly weight = ring.reduce(ipow[j] * rpow[n - j]).scaled(cnj);
    first = ring.reduce(first + inner_first * weight);
    second = ring.reduce(second + inner_second * weight);
  }
  return RabElement::unchecked(spec, std::move(first), std::move(second));
}

std::vector<RabElement> rab_frobenius_gens(const RabSpec& spec,
                                           std::uint64_t q) {
  const RingPresentation& ring = spec.ring();
  if (!is_p_power(q, ring.p()))
    throw precondition_error("q must be a power of the characteristic");
  LucasPair lp = lucas_pair(spec.a(), spec.b(), q, ring);
  std::vector<RabElement> gens;
  const Ambient amb = ring.ambient();
  for (const auto& m : ring.var_polys())
    gens.push_back(
        RabElement::unchecked(spec, m.frobenius(q), Poly::zero(amb)));
  for (const auto& g : spec.ideal().gens()) {
    if (ring.reduce(g).is_zero()) continue;
    Poly gq = g.frobenius(q);
    gens.push_back(
        RabElement::unchecked(spec, lp.a_q * gq, lp.b_q * gq));
  }
  return gens;
}

}  // namespace hk
