#include "hk/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace hk {

namespace {

// Internal working form: terms sorted descending by the active order, so the
// leading term is the front. Converted back to canonical Poly at the API
// boundary.
struct OPoly {
  std::vector<Poly::Term> terms;  // descending
  bool is_zero() const { return terms.empty(); }
  const Poly::Term& lead() const { return terms.front(); }
};

OPoly to_opoly(const Poly& f, const MonomialOrder& order) {
  OPoly r;
  r.terms = f.terms();
  std::sort(r.terms.begin(), r.terms.end(),
            [&](const Poly::Term& a, const Poly::Term& b) {
              return order.greater(a.first, b.first);
            });
  return r;
}

Poly from_opoly(const OPoly& f, const Ambient& amb) {
  std::vector<std::pair<Monomial, std::int64_t>> ts;
  ts.reserve(f.terms.size());
  for (const auto& [m, c] : f.terms) ts.emplace_back(m, c);
  return Poly::from_terms(amb, ts);
}

// a - c * x^u * b, both descending under the same order; merge in one pass.
OPoly sub_scaled(const OPoly& a, std::uint32_t c, const Monomial& u,
                 const OPoly& b, const MonomialOrder& order, std::uint32_t p) {
  OPoly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    Monomial mb = b.terms[j].first * u;
    int cmp = order.compare(a.terms[i].first, mb);
    if (cmp > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      std::uint32_t coef = fp_neg(fp_mul(c, b.terms[j].second, p), p);
      r.terms.emplace_back(std::move(mb), coef);
      ++j;
    } else {
      std::uint32_t coef =
          fp_sub(a.terms[i].second, fp_mul(c, b.terms[j].second, p), p);
      if (coef != 0) r.terms.emplace_back(a.terms[i].first, coef);
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j)
    r.terms.emplace_back(b.terms[j].first * u,
                         fp_neg(fp_mul(c, b.terms[j].second, p), p));
  return r;
}

void make_monic(OPoly& f, std::uint32_t p) {
  if (f.is_zero()) return;
  std::uint32_t inv = fp_inv(f.lead().second, p);
  if (inv == 1) return;
  for (auto& [m, c] : f.terms) c = fp_mul(c, inv, p);
}

// Full normal form of f against a list of monic divisors: repeatedly rewrite
// the highest still-reducible term; irreducible heads accumulate in `out`.
OPoly reduce_full(OPoly f, const std::vector<OPoly>& basis,
                  const std::vector<Monomial>& lms, const MonomialOrder& order,
                  std::uint32_t p) {
  OPoly out;
  while (!f.is_zero()) {
    const auto& [m, c] = f.lead();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (lms[k].divides(m)) {
        f = sub_scaled(f, c, m.divide_by(lms[k]), basis[k], order, p);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.terms.push_back(f.lead());
      f.terms.erase(f.terms.begin());
    }
  }
  return out;
}

struct PairKey {
  std::uint64_t lcm_deg;
  Monomial lcm;
  std::size_t i, j;
  friend bool operator<(const PairKey& a, const PairKey& b) {
    return std::tie(a.lcm_deg, a.lcm, a.i, a.j) <
           std::tie(b.lcm_deg, b.lcm, b.i, b.j);
  }
};

}  // namespace

MonomialIdeal::MonomialIdeal(std::uint32_t nvars, std::vector<Monomial> gens)
    : nvars_(nvars) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) gens_.push_back(gens[i]);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_one();
}

GroebnerBasis::GroebnerBasis(Ambient amb, MonomialOrder order,
                             std::vector<Poly> elems)
    : amb_(amb), order_(std::move(order)), elems_(std::move(elems)) {
  lms_.reserve(elems_.size());
  for (const auto& g : elems_) lms_.push_back(g.leading_term(order_).first);
}

bool GroebnerBasis::contains_unit() const {
  for (const auto& m : lms_)
    if (m.is_one()) return true;
  return false;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  std::uint32_t p = f.ambient().p;
  auto [mf, cf] = f.leading_term(order);
  auto [mg, cg] = g.leading_term(order);
  Monomial l = mf.lcm_with(mg);
  Poly a = f.mul_term(l.divide_by(mf), fp_inv(cf, p));
  Poly b = g.mul_term(l.divide_by(mg), fp_inv(cg, p));
  return a - b;
}

GroebnerBasis reduced_gb(const std::vector<Poly>& gens,
                         const MonomialOrder& order) {
  Ambient amb{};
  std::vector<OPoly> G;
  std::vector<Monomial> lms;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (amb.p == 0)
      amb = g.ambient();
    else if (!(amb == g.ambient()))
      throw ambient_error("generators from different ambient rings");
    OPoly og = to_opoly(g, order);
    make_monic(og, amb.p);
    G.push_back(std::move(og));
  }
  if (G.empty()) {
    if (amb.p == 0 && !gens.empty()) amb = gens.front().ambient();
    return GroebnerBasis(amb, order, {});
  }
  std::uint32_t p = amb.p;
  for (const auto& g : G) lms.push_back(g.lead().first);

  // Pair queue in normal strategy: smallest lcm degree first, then canonical
  // lcm and indices, for fully deterministic runs.
  std::set<PairKey> pairs;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = lms[i].lcm_with(lms[j]);
      pairs.insert(PairKey{l.total_degree(), std::move(l), i, j});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    PairKey pk = *pairs.begin();
    pairs.erase(pairs.begin());
    treated.insert({pk.i, pk.j});

    // Buchberger's first criterion: coprime leads reduce to zero.
    if (lms[pk.i].coprime_with(lms[pk.j])) continue;

    // Chain criterion: some k with LM(k) | lcm(i,j) and both (i,k), (j,k)
    // already treated makes this pair redundant.
    bool chained = false;
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!lms[k].divides(pk.lcm)) continue;
      auto key_ik = std::minmax(pk.i, k);
      auto key_jk = std::minmax(pk.j, k);
      if (treated.count({key_ik.first, key_ik.second}) &&
          treated.count({key_jk.first, key_jk.second}))
        chained = true;
    }
    if (chained) continue;

    // S-polynomial (lcm/LM(f))*f - (lcm/LM(g))*g of two monic elements,
    // fully reduced.
    OPoly shifted_f;
    shifted_f.terms.reserve(G[pk.i].terms.size());
    Monomial uf = pk.lcm.divide_by(lms[pk.i]);
    for (const auto& [m, c] : G[pk.i].terms)
      shifted_f.terms.emplace_back(m * uf, c);
    OPoly s = sub_scaled(shifted_f, 1, pk.lcm.divide_by(lms[pk.j]), G[pk.j],
                         order, p);
    OPoly r = reduce_full(std::move(s), G, lms, order, p);
    if (r.is_zero()) continue;
    make_monic(r, p);
    lms.push_back(r.lead().first);
    G.push_back(std::move(r));
    push_pairs_for(G.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<OPoly> minimal;
  std::vector<Monomial> min_lms;
  // Equal leads can occur among the input generators; keep the first.
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j)
      if (i != j && lms[j].divides(lms[i]) && !(lms[j] == lms[i] && j > i))
        redundant = true;
    if (!redundant) {
      minimal.push_back(G[i]);
      min_lms.push_back(lms[i]);
    }
  }

  // Inter-reduce tails to a fixpoint; leads are an antichain so they persist.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<OPoly> others;
      std::vector<Monomial> other_lms;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j == i) continue;
        others.push_back(minimal[j]);
        other_lms.push_back(min_lms[j]);
      }
      OPoly r = reduce_full(minimal[i], others, other_lms, order, p);
      make_monic(r, p);
      if (r.terms != minimal[i].terms) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }

  std::vector<std::size_t> idx(minimal.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.less(min_lms[a], min_lms[b]);
  });
  std::vector<Poly> out;
  out.reserve(minimal.size());
  for (auto i : idx) out.push_back(from_opoly(minimal[i], amb));
  return GroebnerBasis(amb, order, std::move(out));
}

struct Reducer::Impl {
  Ambient amb;
  MonomialOrder order;
  std::vector<OPoly> basis;
  std::vector<Monomial> lms;
};

Reducer::Reducer(const GroebnerBasis& G)
    : impl_(new Impl{G.ambient(), G.order(), {}, G.leading_monomials()}) {
  impl_->basis.reserve(G.elements().size());
  for (const auto& g : G.elements())
    impl_->basis.push_back(to_opoly(g, G.order()));
}

Reducer::~Reducer() = default;
Reducer::Reducer(Reducer&&) noexcept = default;
Reducer& Reducer::operator=(Reducer&&) noexcept = default;

Poly Reducer::reduce(const Poly& f) const {
  if (f.is_zero() || impl_->basis.empty()) return f;
  if (!(f.ambient() == impl_->amb))
    throw ambient_error("polynomial and basis from different ambient rings");
  OPoly r = reduce_full(to_opoly(f, impl_->order), impl_->basis, impl_->lms,
                        impl_->order, impl_->amb.p);
  return from_opoly(r, f.ambient());
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
  if (f.is_zero() || G.elements().empty()) return f;
  return Reducer(G).reduce(f);
}

MonomialIdeal initial_ideal(const GroebnerBasis& G) {
  return MonomialIdeal(G.ambient().nvars, G.leading_monomials());
}

namespace {

// Inclusion-exclusion over minimal generators, counting box monomials
// divisible by the running lcm; prunes as soon as the lcm leaves the box.
void count_ie(const std::vector<Monomial>& gens, std::size_t from,
              const Monomial& lcm, int sign,
              const std::vector<std::uint32_t>& box, std::int64_t& acc) {
  std::uint64_t cells = 1;
  for (std::uint32_t i = 0; i < lcm.nvars(); ++i) {
    if (lcm[i] >= box[i]) return;  // nothing here nor in any superset
    cells *= box[i] - lcm[i];
  }
  acc += sign * static_cast<std::int64_t>(cells);
  for (std::size_t k = from; k < gens.size(); ++k)
    count_ie(gens, k + 1, lcm.lcm_with(gens[k]), -sign, box, acc);
}

}  // namespace

LengthValue kdim_quotient(const MonomialIdeal& M) {
  if (M.is_unit()) return LengthValue(0);
  std::uint32_t n = M.nvars();
  std::vector<std::uint32_t> box(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    bool bounded = false;
    for (const auto& g : M.min_gens()) {
      if (g.is_pure_power_of(v)) {
        box[v] = bounded ? std::min(box[v], g[v]) : g[v];
        bounded = true;
      }
    }
    if (!bounded) return LengthValue::infinite();
  }
  // Standard monomials all lie in the box; count the non-divisible ones.
  std::int64_t count = 0;
  count_ie(M.min_gens(), 0, Monomial::one(n), +1, box, count);
  return LengthValue(static_cast<std::uint64_t>(count));
}

std::uint32_t krull_dim(const MonomialIdeal& M) {
  std::uint32_t n = M.nvars();
  if (n >= 30) throw precondition_error("too many variables for krull_dim");
  std::uint32_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& g : M.min_gens()) {
      bool inside = true;  // does g involve only variables from the subset?
      for (std::uint32_t v = 0; v < n && inside; ++v)
        if (g[v] != 0 && !(mask & (1u << v))) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, static_cast<std::uint32_t>(
                                      __builtin_popcount(mask)));
  }
  return best;
}

bool ideal_membership(const Poly& f, const std::vector<Poly>& gens,
                      const MonomialOrder& order) {
  if (f.is_zero()) return true;
  return normal_form(f, reduced_gb(gens, order)).is_zero();
}

}  // namespace hk
