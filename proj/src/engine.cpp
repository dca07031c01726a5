#include "hk/engine.hpp"

namespace hk {

LengthValue hk_base(const RingPresentation& ring, std::uint64_t q) {
  IdealHandle mq = frobenius_power(IdealHandle::maximal(ring), q);
  return local_length(mq);
}

LengthValue hk_module(const RingPresentation& ring, const IdealHandle& I,
                      std::uint64_t q) {
  IdealHandle mq = frobenius_power(IdealHandle::maximal(ring), q);
  IdealHandle W = ideal_product(mq, I);
  return subquotient_dim(I, W, mq);
}

LengthValue hk_module_subtraction(const RingPresentation& ring,
                                  const IdealHandle& I, std::uint64_t q) {
  IdealHandle mq = frobenius_power(IdealHandle::maximal(ring), q);
  IdealHandle W = ideal_product(mq, I);
  LengthValue big = local_length(W);
  LengthValue small = local_length(I);
  if (!big.is_finite() || !small.is_finite())
    throw precondition_error(
        "subtraction path needs an m-primary I (finite lengths)");
  return LengthValue(big.value() - small.value());
}

LengthValue hk_correction(const RingPresentation& ring, const IdealHandle& I,
                          const Poly& a, const Poly& b, std::uint64_t q) {
  LucasPair lp = lucas_pair(a, b, q, ring);
  if (ring.reduce(lp.b_q).is_zero()) return LengthValue(0);
  IdealHandle mq = frobenius_power(IdealHandle::maximal(ring), q);
  IdealHandle W = ideal_product(mq, I);
  IdealHandle Iq = frobenius_power(I, q);
  std::vector<Poly> ngens;
  ngens.reserve(Iq.gens().size());
  for (const auto& g : Iq.gens()) {
    Poly h = ring.reduce(lp.b_q * g);
    if (!h.is_zero()) ngens.push_back(std::move(h));
  }
  IdealHandle N(ring, std::move(ngens));
  return subquotient_dim(N, W, mq);
}

HKRow hk_rab(const RabSpec& spec, std::uint64_t q) {
  const RingPresentation& ring = spec.ring();
  HKRow row;
  row.e = p_power_exponent(q, ring.p());
  row.q = q;

  LengthValue base = hk_base(ring, q);
  LengthValue module = hk_module(ring, spec.ideal(), q);
  LengthValue corr = hk_correction(ring, spec.ideal(), spec.a(), spec.b(), q);
  if (!base.is_finite() || !module.is_finite() || !corr.is_finite())
    throw precondition_error("infinite length in Hilbert-Kunz row");

  row.base = base.value();
  row.module_len = module.value();
  row.correction = corr.value();
  if (row.correction > row.module_len)
    throw precondition_error("correction exceeds module length");
  row.total = row.base + row.module_len - row.correction;
  row.bq_class =
      classify_bq(lucas_pair(spec.a(), spec.b(), q, ring), ring);
  return row;
}

AbsorptionResult check_absorption(const RingPresentation& ring,
                                  const IdealHandle& I, std::uint64_t q) {
  if (!is_p_power(q, ring.p()))
    throw precondition_error("q must be a power of the characteristic");
  IdealHandle mq = frobenius_power(IdealHandle::maximal(ring), q);
  IdealHandle W = ideal_product(mq, I);
  GroebnerBasis G =
      reduced_gb(W.gens_with_j(), MonomialOrder::grevlex(ring.nvars()));
  Reducer red(G);
  for (const auto& g : I.gens()) {
    if (ring.reduce(g).is_zero()) continue;
    Poly gq = g.frobenius(q);
    if (!red.reduce(gq).is_zero()) return {false, std::move(gq)};
  }
  return {true, std::nullopt};
}

MultiplicityEstimate multiplicity_estimate(const std::vector<HKRow>& rows,
                                           std::uint32_t d) {
  if (rows.empty()) throw precondition_error("no rows");
  MultiplicityEstimate est;
  est.d = d;
  for (const auto& row : rows) {
    __int128 qd = 1;
    for (std::uint32_t k = 0; k < d; ++k) qd *= static_cast<__int128>(row.q);
    est.f_values.push_back(Rational(static_cast<__int128>(row.total), qd));
  }
  est.last = est.f_values.back();
  for (std::size_t k = 1; k < est.f_values.size(); ++k)
    est.diff_signs.push_back((est.f_values[k] - est.f_values[k - 1]).sign());
  return est;
}

SecondCoeffReport second_coeff_analyze(const std::vector<HKRow>& rows) {
  const std::size_t n = rows.size();
  if (n < 4)
    throw precondition_error(
        "second-coefficient analysis needs at least 4 rows");
  const std::size_t burn = 1;

  SecondCoeffReport report;
  for (std::uint32_t k = 1; k <= static_cast<std::uint32_t>(n / 2); ++k) {
    if (burn + k >= n) break;  // need at least one windowed comparison
    // alpha = (L(b+k) - L(b)) / (q(b+k) - q(b)) as an exact fraction.
    __int128 dnum = static_cast<__int128>(rows[burn + k].total) -
                    static_cast<__int128>(rows[burn].total);
    __int128 dden = static_cast<__int128>(rows[burn + k].q) -
                    static_cast<__int128>(rows[burn].q);
    Rational alpha(dnum, dden);
    bool ok = true;
    for (std::size_t e = burn; e + k < n && ok; ++e) {
      Rational lhs = Rational(static_cast<std::int64_t>(rows[e + k].total)) -
                     Rational(static_cast<std::int64_t>(rows[e].total));
      Rational rhs =
          alpha * (Rational(static_cast<std::int64_t>(rows[e + k].q)) -
                   Rational(static_cast<std::int64_t>(rows[e].q)));
      if (!(lhs == rhs)) ok = false;
    }
    if (!ok) continue;

    auto residual = [&](std::size_t e) {
      return Rational(static_cast<std::int64_t>(rows[e].total)) -
             alpha * Rational(static_cast<std::int64_t>(rows[e].q));
    };
    // Anchor the cycle at the earliest row consistent with the period.
    std::size_t anchor = burn;
    while (anchor > 0 && residual(anchor - 1) == residual(anchor - 1 + k))
      --anchor;
    report.alpha = alpha;
    report.period = k;
    report.anchor_e = rows[anchor].e;
    for (std::size_t t = 0; t < k; ++t)
      report.residual_cycle.push_back(residual(anchor + t));
    return report;
  }
  report.period = std::nullopt;
  return report;
}

}  // namespace hk
