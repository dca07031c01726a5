#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hk/rab.hpp"
#include "hk/rational.hpp"

namespace hk {

/// One row of a Hilbert-Kunz table for R(I)_{a,b}:
///   total = l(R/m^[q]) + l(I/m^[q]I) - l((m^[q]I + B_q I^[q]) / m^[q]I).
struct HKRow {
  std::uint32_t e = 0;
  std::uint64_t q = 1;
  std::uint64_t base = 0;
  std::uint64_t module_len = 0;
  std::uint64_t correction = 0;
  std::uint64_t total = 0;
  BqClass bq_class = BqClass::UNIT;
};

/// l(R/m^[q]), the Hilbert-Kunz function of the base ring at q.
LengthValue hk_base(const RingPresentation& ring, std::uint64_t q);

/// l(I/m^[q]I), via the spanning-set subquotient with killer m^[q].
LengthValue hk_module(const RingPresentation& ring, const IdealHandle& I,
                      std::uint64_t q);

/// The same length by subtraction, l(R/m^[q]I) - l(R/I); only valid when I
/// is m-primary. Kept as an independent cross-check of hk_module.
LengthValue hk_module_subtraction(const RingPresentation& ring,
                                  const IdealHandle& I, std::uint64_t q);

/// l((m^[q]I + B_q I^[q]) / m^[q]I); zero whenever B_q = 0 in R.
LengthValue hk_correction(const RingPresentation& ring, const IdealHandle& I,
                          const Poly& a, const Poly& b, std::uint64_t q);

/// Assembles the full row for q = p^e.
HKRow hk_rab(const RabSpec& spec, std::uint64_t q);

struct AbsorptionResult {
  bool absorbed = false;               // I^[q] contained in m^[q]I ?
  std::optional<Poly> witness = {};    // first failing generator power
};

/// Checks I^[q] subset of m^[q]I generator by generator.
AbsorptionResult check_absorption(const RingPresentation& ring,
                                  const IdealHandle& I, std::uint64_t q);

/// The sequence f_e = total / q^d as exact rationals, plus the trend data
/// (no extrapolated limit: the window is reported as-is).
struct MultiplicityEstimate {
  std::uint32_t d = 0;
  std::vector<Rational> f_values;
  Rational last;
  std::vector<int> diff_signs;  // signs of first differences
};

MultiplicityEstimate multiplicity_estimate(const std::vector<HKRow>& rows,
                                           std::uint32_t d);

/// Second-coefficient analysis for d = 1: recover the exact rational alpha
/// with L(q) = alpha q + c_e and c eventually periodic in e. The first row
/// is burn-in (small-q degenerations); the reported cycle is anchored at the
/// earliest row consistent with the detected period.
struct SecondCoeffReport {
  Rational alpha;
  std::optional<std::uint32_t> period;  // nullopt: aperiodic in the window
  std::vector<Rational> residual_cycle;
  std::uint32_t anchor_e = 0;
};

SecondCoeffReport second_coeff_analyze(const std::vector<HKRow>& rows);

}  // namespace hk
