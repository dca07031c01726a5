#include "hk/oracle.hpp"

#include <algorithm>
#include <map>

namespace hk {

std::uint32_t gf_rank(std::vector<std::vector<std::uint32_t>> rows,
                      std::uint32_t p) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  std::uint32_t rank = 0;
  std::size_t pivot_col = 0;
  for (auto& r : rows) r.resize(width, 0);
  for (; pivot_col < width; ++pivot_col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][pivot_col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    std::uint32_t inv = fp_inv(rows[rank][pivot_col], p);
    for (std::size_t j = pivot_col; j < width; ++j)
      rows[rank][j] = fp_mul(rows[rank][j], inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][pivot_col] == 0) continue;
      std::uint32_t c = rows[i][pivot_col];
      for (std::size_t j = pivot_col; j < width; ++j)
        rows[i][j] = fp_sub(rows[i][j], fp_mul(c, rows[rank][j], p), p);
    }
    ++rank;
    if (rank == rows.size()) break;
  }
  return rank;
}

FiniteModel::FiniteModel(RabSpec spec) : spec_(std::move(spec)) {}

FiniteModel FiniteModel::build(const RabSpec& spec) {
  const RingPresentation& ring = spec.ring();
  const std::uint32_t p = ring.p();

  // Artinian, origin-supported base ring: J must be m-primary.
  LengthValue lr = local_length(IdealHandle(ring, {}));
  MonomialIdeal inJ = initial_ideal(ring.j_groebner());
  LengthValue global = kdim_quotient(inJ);
  if (!global.is_finite() || !lr.is_finite() ||
      global.value() != lr.value())
    throw precondition_error(
        "finite model requires an Artinian base ring supported at the origin");

  FiniteModel model(spec);

  // Standard monomials of in(J), in canonical order.
  std::vector<std::uint32_t> box(ring.nvars(), 0);
  for (std::uint32_t v = 0; v < ring.nvars(); ++v) {
    for (const auto& g : inJ.min_gens())
      if (g.is_pure_power_of(v)) box[v] = std::max(box[v], g[v]);
    if (box[v] == 0)
      throw precondition_error("missing pure power bound");  // unreachable
  }
  std::vector<std::uint32_t> idx(ring.nvars(), 0);
  while (true) {
    Monomial m(idx);
    if (!inJ.contains(m)) model.basis_r_.push_back(m);
    std::uint32_t v = ring.nvars();
    for (; v-- > 0;) {
      if (++idx[v] < box[v]) break;
      idx[v] = 0;
    }
    if (v == static_cast<std::uint32_t>(-1)) break;
  }
  std::sort(model.basis_r_.begin(), model.basis_r_.end());

  std::map<Monomial, std::uint32_t> col;
  for (std::uint32_t k = 0; k < model.basis_r_.size(); ++k)
    col.emplace(model.basis_r_[k], k);

  auto to_coords = [&](const Poly& f) {
    std::vector<std::uint32_t> v(model.basis_r_.size(), 0);
    for (const auto& [m, c] : f.terms()) {
      auto it = col.find(m);
      if (it == col.end())
        throw precondition_error("normal form outside the monomial basis");
      v[it->second] = c;
    }
    return v;
  };

  // Echelon basis of I inside R: span of u*g over basis monomials u and
  // generators g.
  std::vector<std::vector<std::uint32_t>> echelon;
  auto insert_echelon = [&](std::vector<std::uint32_t> v) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] == 0) continue;
      std::size_t r = 0;
      for (; r < echelon.size(); ++r) {
        std::size_t lead = 0;
        while (lead < echelon[r].size() && echelon[r][lead] == 0) ++lead;
        if (lead == c) break;
      }
      if (r == echelon.size()) {
        std::uint32_t inv = fp_inv(v[c], p);
        for (auto& x : v) x = fp_mul(x, inv, p);
        echelon.push_back(std::move(v));
        return;
      }
      std::uint32_t k = v[c];
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = fp_sub(v[j], fp_mul(k, echelon[r][j], p), p);
    }
  };
  for (const auto& g : spec.ideal().gens()) {
    for (const auto& u : model.basis_r_) {
      Poly ug = ring.reduce(Poly::term(ring.ambient(), u, 1) * g);
      if (!ug.is_zero()) insert_echelon(to_coords(ug));
    }
  }
  std::sort(echelon.begin(), echelon.end(),
            [](const auto& a, const auto& b) {
              return std::find_if(a.begin(), a.end(), [](auto x) { return x != 0; }) -
                         a.begin() <
                     std::find_if(b.begin(), b.end(), [](auto x) { return x != 0; }) -
                         b.begin();
            });
  model.basis_i_ = std::move(echelon);
  if (model.basis_i_.empty())
    throw precondition_error("I is the zero ideal in the model");

  // Structure constants from rab_mul on basis pairs.
  const std::uint32_t m = model.dim();
  model.table_.assign(m, std::vector<std::vector<std::uint32_t>>(m));
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y)
      model.table_[x][y] = model.coords_of(
          rab_mul(model.basis_element(x), model.basis_element(y), spec));
  return model;
}

RabElement FiniteModel::basis_element(std::uint32_t k) const {
  const RingPresentation& ring = spec_.ring();
  const Ambient amb = ring.ambient();
  if (k < dim_r()) {
    return RabElement::unchecked(
        spec_, Poly::term(amb, basis_r_[k], 1), Poly::zero(amb));
  }
  const auto& row = basis_i_[k - dim_r()];
  std::vector<std::pair<Monomial, std::int64_t>> ts;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) ts.emplace_back(basis_r_[j], row[j]);
  return RabElement::unchecked(spec_, Poly::zero(amb),
                               Poly::from_terms(amb, ts));
}

std::vector<std::uint32_t> FiniteModel::coords_of(const RabElement& x) const {
  const RingPresentation& ring = spec_.ring();
  const std::uint32_t p = ring.p();
  std::vector<std::uint32_t> out(dim(), 0);

  std::map<Monomial, std::uint32_t> col;
  for (std::uint32_t k = 0; k < basis_r_.size(); ++k)
    col.emplace(basis_r_[k], k);

  Poly r = ring.reduce(x.r());
  for (const auto& [m, c] : r.terms()) {
    auto it = col.find(m);
    if (it == col.end())
      throw precondition_error("normal form outside the monomial basis");
    out[it->second] = c;
  }

  // Express the t-part against the echelon basis of I.
  Poly i = ring.reduce(x.i());
  std::vector<std::uint32_t> v(basis_r_.size(), 0);
  for (const auto& [m, c] : i.terms()) {
    auto it = col.find(m);
    if (it == col.end())
      throw precondition_error("normal form outside the monomial basis");
    v[it->second] = c;
  }
  for (std::size_t r_idx = 0; r_idx < basis_i_.size(); ++r_idx) {
    std::size_t lead = 0;
    while (lead < basis_i_[r_idx].size() && basis_i_[r_idx][lead] == 0) ++lead;
    if (lead >= v.size() || v[lead] == 0) continue;
    std::uint32_t c = v[lead];
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = fp_sub(v[j], fp_mul(c, basis_i_[r_idx][j], p), p);
    out[dim_r() + r_idx] = c;
  }
  for (auto x_left : v)
    if (x_left != 0)
      throw precondition_error("t-coefficient is not in the span of I");
  return out;
}

std::vector<std::uint32_t> FiniteModel::mul_coords(
    const std::vector<std::uint32_t>& x,
    const std::vector<std::uint32_t>& y) const {
  const std::uint32_t p = spec_.ring().p();
  std::vector<std::uint32_t> out(dim(), 0);
  for (std::uint32_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    for (std::uint32_t b = 0; b < dim(); ++b) {
      if (y[b] == 0) continue;
      std::uint32_t c = fp_mul(x[a], y[b], p);
      const auto& t = table_[a][b];
      for (std::uint32_t k = 0; k < dim(); ++k)
        if (t[k] != 0) out[k] = fp_add(out[k], fp_mul(c, t[k], p), p);
    }
  }
  return out;
}

LengthValue oracle_hk_rab(const FiniteModel& model, const RabSpec& spec,
                          std::uint64_t q) {
  const RingPresentation& ring = spec.ring();
  if (!is_p_power(q, ring.p()))
    throw precondition_error("q must be a power of the characteristic");
  const Ambient amb = ring.ambient();

  // Generators of n, raised to the q-th power by repeated squaring only.
  std::vector<RabElement> ngens;
  for (const auto& v : ring.var_polys())
    ngens.push_back(RabElement::unchecked(spec, v, Poly::zero(amb)));
  for (const auto& g : spec.ideal().gens()) {
    if (ring.reduce(g).is_zero()) continue;
    ngens.push_back(RabElement::unchecked(spec, Poly::zero(amb), g));
  }

  std::vector<std::vector<std::uint32_t>> span;
  for (const auto& g : ngens) {
    RabElement gq = rab_pow_iter(g, q, spec);
    std::vector<std::uint32_t> gc = model.coords_of(gq);
    for (std::uint32_t b = 0; b < model.dim(); ++b) {
      std::vector<std::uint32_t> unit(model.dim(), 0);
      unit[b] = 1;
      span.push_back(model.mul_coords(gc, unit));
    }
  }
  std::uint32_t rank = gf_rank(std::move(span), ring.p());
  return LengthValue(model.dim() - rank);
}

}  // namespace hk
