#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hk/engine.hpp"
#include "hk/parse.hpp"

namespace hk {

/// A parsed and validated experiment description. Polynomials are checked
/// against the ring at parse time; invalid configs never produce a value.
struct ExperimentConfig {
  std::uint32_t characteristic = 2;
  std::vector<std::string> variables;
  std::vector<std::string> quotient_ideal;  // generators of J, as text
  std::vector<std::string> ideal;           // generators of I, as text
  std::string a = "0";
  std::string b = "0";
  std::uint32_t e_min = 1;
  std::uint32_t e_max = 4;
  MonomialOrder::Kind order_kind = MonomialOrder::Kind::grevlex;
  std::vector<std::string> order_precedence;  // defaults to declaration order
  std::vector<std::string> outputs;           // table|gb_dump|oracle_check|second_coeff
  std::uint32_t e_cap = 7;

  RingPresentation ring() const;
  IdealHandle ideal_handle() const;
  Poly a_poly() const;
  Poly b_poly() const;
  MonomialOrder order() const;
  RabSpec rab_spec() const;
};

/// Parse a JSON config document; throws config_error on any problem
/// (non-prime characteristic, empty ideal, unparsable polynomials, ...).
ExperimentConfig parse_config(const std::string& text);

/// Canonical JSON rendering; parse_config(print_config(c)) == c.
std::string print_config(const ExperimentConfig& cfg);

bool operator==(const ExperimentConfig& x, const ExperimentConfig& y);

/// One row per e in [e_min, e_max], deterministic order. Rows for distinct
/// e are independent; jobs > 1 computes them concurrently with identical
/// results.
std::vector<HKRow> run_experiment(const ExperimentConfig& cfg,
                                  unsigned jobs = 0 /* 0: hardware */);

/// CSV report: header `e,q,base,module,correction,total,f_e,bq_class`,
/// f_e as the exact fraction num/den. Byte-stable for identical inputs.
std::string emit_csv(const ExperimentConfig& cfg,
                     const std::vector<HKRow>& rows);

/// JSON report mirroring the CSV fields plus requested extra sections.
std::string emit_json(const ExperimentConfig& cfg,
                      const std::vector<HKRow>& rows);

/// Reduced Groebner basis of J + m^[q] in the config's order, rendered in
/// the polynomial text syntax (ascending leading monomials).
std::vector<std::string> gb_dump(const ExperimentConfig& cfg, std::uint64_t q);

struct OracleCheckRow {
  std::uint32_t e;
  std::uint64_t formula_total;
  std::uint64_t oracle_total;
  bool match;
};

/// Formula vs finite-model oracle on the config's own instance (requires an
/// Artinian base ring).
std::vector<OracleCheckRow> oracle_check(const ExperimentConfig& cfg);

/// Parse rows back out of an emitted JSON report (for `analyze`).
std::vector<HKRow> rows_from_json_report(const std::string& text);

/// The `dimension` field of a JSON report, when present.
std::optional<std::uint32_t> report_dimension(const std::string& text);

std::string second_coeff_json(const SecondCoeffReport& report);

}  // namespace hk
