#include "hk/ideal.hpp"

#include <algorithm>
#include <map>

namespace hk {

namespace {

MonomialOrder work_order(const RingPresentation& ring) {
  return MonomialOrder::grevlex(ring.nvars());
}

/// Intersection of two explicit generator lists in the ambient polynomial
/// ring k[x] (no implicit J): eliminate a fresh tag variable t from
/// t*U + (1-t)*V.
std::vector<Poly> intersect_lifted(const RingPresentation& ring,
                                   const std::vector<Poly>& ugens,
                                   const std::vector<Poly>& vgens) {
  std::uint32_t n = ring.nvars();
  Ambient ext{ring.p(), n + 1};
  Poly t = Poly::variable(ext, n);
  Poly one_minus_t = Poly::constant(ext, 1) - t;

  std::vector<Poly> gens;
  for (const auto& f : ugens)
    if (!f.is_zero()) gens.push_back(t * f.extended(n + 1));
  for (const auto& g : vgens)
    if (!g.is_zero()) gens.push_back(one_minus_t * g.extended(n + 1));
  if (gens.empty()) return {};

  MonomialOrder elim = MonomialOrder::eliminate_first(n, work_order(ring));
  GroebnerBasis G = reduced_gb(gens, elim);

  std::vector<Poly> result;
  for (const auto& g : G.elements()) {
    bool uses_tag = false;
    for (const auto& [m, c] : g.terms())
      if (m[n] != 0) {
        uses_tag = true;
        break;
      }
    if (!uses_tag) result.push_back(g.restricted(n));
  }
  return result;
}

}  // namespace

IdealHandle::IdealHandle(RingPresentation ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (!(g.ambient() == ring_.ambient()))
      throw ambient_error("ideal generator from a different ambient ring");
}

IdealHandle IdealHandle::maximal(const RingPresentation& ring) {
  return IdealHandle(ring, ring.var_polys());
}

IdealHandle IdealHandle::unit(const RingPresentation& ring) {
  return IdealHandle(ring, {Poly::constant(ring.ambient(), 1)});
}

std::vector<Poly> IdealHandle::gens_with_j() const {
  std::vector<Poly> out = gens_;
  const auto& j = ring_.jgens();
  out.insert(out.end(), j.begin(), j.end());
  if (out.empty()) out.push_back(Poly::zero(ring_.ambient()));
  return out;
}

bool IdealHandle::is_proper() const {
  for (const auto& g : gens_)
    if (ring_.reduce(g).constant_term() != 0) return false;
  return true;
}

bool IdealHandle::is_nonzero() const {
  for (const auto& g : gens_)
    if (!ring_.reduce(g).is_zero()) return true;
  return false;
}

void check_same_ring(const IdealHandle& a, const IdealHandle& b) {
  if (!(a.ring() == b.ring()))
    throw ambient_error("ideals over different rings");
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  std::vector<Poly> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) {
      Poly h = f * g;
      if (!h.is_zero()) gens.push_back(std::move(h));
    }
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle frobenius_power(const IdealHandle& a, std::uint64_t q) {
  if (!is_p_power(q, a.ring().p()))
    throw precondition_error("bracket power exponent must be a power of p");
  std::vector<Poly> gens;
  gens.reserve(a.gens().size());
  for (const auto& g : a.gens()) gens.push_back(g.frobenius(q));
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  const RingPresentation& ring = a.ring();
  std::vector<Poly> meet =
      intersect_lifted(ring, a.gens_with_j(), b.gens_with_j());
  // Generators inside J are implicit in every handle; drop them.
  std::vector<Poly> result;
  for (auto& g : meet)
    if (!ring.reduce(g).is_zero()) result.push_back(std::move(g));
  return IdealHandle(ring, std::move(result));
}

Poly poly_divexact(const Poly& f, const Poly& h) {
  if (h.is_zero()) throw precondition_error("division by zero polynomial");
  const Ambient& amb = f.ambient();
  MonomialOrder order = MonomialOrder::grevlex(amb.nvars);
  std::uint32_t p = amb.p;
  auto [lm, lc] = h.leading_term(order);
  std::uint32_t lc_inv = fp_inv(lc, p);
  Poly rem = f;
  Poly quot = Poly::zero(amb);
  while (!rem.is_zero()) {
    auto [m, c] = rem.leading_term(order);
    if (!lm.divides(m))
      throw precondition_error("inexact polynomial division");
    Monomial u = m.divide_by(lm);
    std::uint32_t k = fp_mul(c, lc_inv, p);
    quot = quot + Poly::term(amb, u, k);
    rem = rem - h.mul_term(u, k);
  }
  return quot;
}

IdealHandle colon(const IdealHandle& a, const Poly& h) {
  const RingPresentation& ring = a.ring();
  if (ring.reduce(h).is_zero())
    throw precondition_error("colon by zero element");
  // ((A + J) : h) = (1/h) ((A + J) intersect (h)) in k[x]; the principal
  // factor must not absorb J or the quotients stop being exact.
  std::vector<Poly> meet = intersect_lifted(ring, a.gens_with_j(), {h});
  std::vector<Poly> gens;
  for (const auto& g : meet) {
    Poly q = poly_divexact(g, h);
    if (!ring.reduce(q).is_zero()) gens.push_back(std::move(q));
  }
  return IdealHandle(ring, std::move(gens));
}

IdealHandle colon_ideal(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  const RingPresentation& ring = a.ring();
  bool first = true;
  IdealHandle acc = IdealHandle::unit(ring);
  for (const auto& g : b.gens()) {
    if (ring.reduce(g).is_zero()) continue;  // (A : 0) = R, neutral
    IdealHandle c = colon(a, g);
    acc = first ? c : ideal_intersection(acc, c);
    first = false;
  }
  return acc;  // B = 0 gives (A : 0) = (1)
}

bool in_ideal(const Poly& f, const IdealHandle& a) {
  return ideal_membership(f, a.gens_with_j(), work_order(a.ring()));
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  for (const auto& g : b.gens())
    if (!in_ideal(g, a)) return false;
  for (const auto& g : a.gens())
    if (!in_ideal(g, b)) return false;
  return true;
}

IdealHandle saturate_m(const IdealHandle& a) {
  IdealHandle m = IdealHandle::maximal(a.ring());
  IdealHandle cur = a;
  while (true) {
    if (in_ideal(Poly::constant(a.ring().ambient(), 1), cur))
      return IdealHandle::unit(a.ring());
    IdealHandle next = colon_ideal(cur, m);
    if (ideal_equal(next, cur)) return cur;
    cur = std::move(next);
  }
}

namespace {

/// Generators of m^N: all monomials of total degree N.
std::vector<Poly> m_power_gens(const RingPresentation& ring, std::uint32_t N) {
  std::vector<Poly> out;
  std::uint32_t n = ring.nvars();
  std::vector<std::uint32_t> cur(n, 0);
  auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(Poly::term(ring.ambient(), Monomial(cur), 1));
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, N);
  return out;
}

LengthValue finite_quotient_dim(const std::vector<Poly>& gens,
                                const MonomialOrder& order) {
  return kdim_quotient(initial_ideal(reduced_gb(gens, order)));
}

}  // namespace

LengthValue local_length(const IdealHandle& a) {
  const RingPresentation& ring = a.ring();
  MonomialOrder order = work_order(ring);
  std::vector<Poly> gens = a.gens_with_j();
  GroebnerBasis G = reduced_gb(gens, order);
  if (G.contains_unit()) return LengthValue(0);
  MonomialIdeal M = initial_ideal(G);
  LengthValue global = kdim_quotient(M);

  if (global.is_finite()) {
    std::uint64_t k = global.value();
    // m-primary certificate: every variable is nilpotent modulo the ideal,
    // with index at most the quotient dimension.
    Reducer red(G);
    bool primary = true;
    for (std::uint32_t v = 0; v < ring.nvars() && primary; ++v) {
      Poly xk = Poly::term(ring.ambient(),
                           Monomial::var(ring.nvars(), v,
                                         static_cast<std::uint32_t>(k)),
                           1);
      if (!red.reduce(xk).is_zero()) primary = false;
    }
    if (primary) return global;
    // Finite scheme with points away from the origin: subtract their part.
    IdealHandle sat = saturate_m(a);
    LengthValue away = finite_quotient_dim(sat.gens_with_j(), order);
    return LengthValue(global.value() - away.value());
  }

  // Infinite global dimension. The origin still contributes a finite local
  // length iff it is an isolated point of V(A + J), i.e. the saturation
  // misses the origin.
  IdealHandle sat = saturate_m(a);
  GroebnerBasis Gs = reduced_gb(sat.gens_with_j(), order);
  bool origin_in_sat_locus = !Gs.contains_unit();
  if (origin_in_sat_locus) {
    origin_in_sat_locus = true;
    for (const auto& g : Gs.elements())
      if (g.constant_term() != 0) {
        origin_in_sat_locus = false;
        break;
      }
  }
  if (origin_in_sat_locus) return LengthValue::infinite();

  // Origin isolated: dim k[x]/(A + m^N) stabilizes at the local length.
  LengthValue prev = LengthValue(0);
  for (std::uint32_t N = 1;; ++N) {
    std::vector<Poly> cut = gens;
    auto mN = m_power_gens(ring, N);
    cut.insert(cut.end(), mN.begin(), mN.end());
    LengthValue cur = finite_quotient_dim(cut, order);
    if (N > 1 && cur == prev) return cur;
    prev = cur;
    if (N > 4096) throw precondition_error("local length failed to stabilize");
  }
}

LengthValue subquotient_dim(const IdealHandle& N, const IdealHandle& W,
                            const IdealHandle& killer) {
  check_same_ring(N, W);
  check_same_ring(N, killer);
  const RingPresentation& ring = N.ring();
  std::uint32_t nv = ring.nvars();
  std::uint32_t p = ring.p();

  // Pure-power box of the killer.
  std::vector<std::uint32_t> box(nv, 0);
  std::vector<bool> bounded(nv, false);
  for (const auto& g : killer.gens()) {
    if (g.terms().size() != 1) continue;
    const Monomial& m = g.terms()[0].first;
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (m.is_pure_power_of(v)) {
        box[v] = bounded[v] ? std::min(box[v], m[v]) : m[v];
        bounded[v] = true;
      }
    }
  }
  for (std::uint32_t v = 0; v < nv; ++v)
    if (!bounded[v])
      throw precondition_error(
          "killer ideal has no pure power of variable " + ring.var_names()[v]);

  MonomialOrder order = work_order(ring);
  GroebnerBasis GW = reduced_gb(W.gens_with_j(), order);
  Reducer red(GW);

  // killer * N must vanish in R/(W + J).
  for (const auto& kg : killer.gens())
    for (const auto& ng : N.gens())
      if (!red.reduce(kg * ng).is_zero())
        throw precondition_error(
            "killer ideal does not annihilate the subquotient");

  // Incremental rank over Z/p of the normal forms of u*n for u in the box.
  std::map<Monomial, std::uint32_t> col_of;
  std::vector<std::vector<std::uint32_t>> rows;      // echelon rows
  std::map<std::uint32_t, std::uint32_t> pivot_row;  // col -> row index

  auto add_vector = [&](const Poly& f) {
    if (f.is_zero()) return;
    std::vector<std::uint32_t> v;
    for (const auto& [m, c] : f.terms()) {
      auto [it, fresh] =
          col_of.emplace(m, static_cast<std::uint32_t>(col_of.size()));
      std::uint32_t col = it->second;
      if (col >= v.size()) v.resize(col + 1, 0);
      v[col] = c;
    }
    for (std::uint32_t col = 0; col < v.size(); ++col) {
      if (v[col] == 0) continue;
      auto it = pivot_row.find(col);
      if (it == pivot_row.end()) {
        std::uint32_t inv = fp_inv(v[col], p);
        for (auto& x : v) x = fp_mul(x, inv, p);
        rows.push_back(std::move(v));
        pivot_row.emplace(col, static_cast<std::uint32_t>(rows.size() - 1));
        return;
      }
      const auto& r = rows[it->second];
      std::uint32_t c = v[col];
      if (r.size() > v.size()) v.resize(r.size(), 0);
      for (std::uint32_t j = col; j < r.size(); ++j)
        v[j] = fp_sub(v[j], fp_mul(c, r[j], p), p);
    }
  };

  // Walk the box in odometer order, axis 0 outermost. Each cell's value is
  // one variable multiplication away from an already reduced neighbour, so a
  // single slab of the previous axis-0 layer is enough state.
  std::uint64_t slab_size = 1;
  for (std::uint32_t v = 1; v < nv; ++v) slab_size *= box[v];
  std::vector<std::uint64_t> stride(nv, 1);  // strides within a slab
  for (std::uint32_t v = nv; v-- > 2;) stride[v - 1] = stride[v] * box[v];

  for (const auto& ng : N.gens()) {
    Poly base = red.reduce(ng);
    std::vector<Poly> prev_slab(slab_size), cur_slab(slab_size);
    for (std::uint32_t i0 = 0; i0 < box[0]; ++i0) {
      std::vector<std::uint32_t> rest(nv, 0);  // rest[0] unused
      for (std::uint64_t r = 0; r < slab_size; ++r) {
        std::uint32_t axis = 0;
        for (std::uint32_t v = nv; v-- > 1;)
          if (rest[v] != 0) {
            axis = v;
            break;
          }
        Poly val;
        if (axis != 0) {
          val = red.reduce(
              cur_slab[r - stride[axis]].mul_term(Monomial::var(nv, axis), 1));
        } else if (i0 == 0) {
          val = base;
        } else {
          val = red.reduce(prev_slab[0].mul_term(Monomial::var(nv, 0), 1));
        }
        add_vector(val);
        cur_slab[r] = std::move(val);
        for (std::uint32_t v = nv; v-- > 1;) {
          if (++rest[v] < box[v]) break;
          rest[v] = 0;
        }
      }
      std::swap(prev_slab, cur_slab);
    }
  }
  return LengthValue(rows.size());
}

}  // namespace hk
