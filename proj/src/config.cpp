#include "hk/config.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include <json.hpp>

#include "hk/oracle.hpp"

namespace hk {

using ordered_json = nlohmann::ordered_json;

RingPresentation ExperimentConfig::ring() const {
  PrimeChar pc(characteristic);
  Ambient amb{characteristic, static_cast<std::uint32_t>(variables.size())};
  std::vector<Poly> jgens;
  for (const auto& s : quotient_ideal)
    jgens.push_back(parse_poly(s, amb, variables));
  return RingPresentation(pc, variables, std::move(jgens));
}

IdealHandle ExperimentConfig::ideal_handle() const {
  RingPresentation r = ring();
  std::vector<Poly> gens;
  for (const auto& s : ideal)
    gens.push_back(parse_poly(s, r.ambient(), variables));
  return IdealHandle(std::move(r), std::move(gens));
}

Poly ExperimentConfig::a_poly() const {
  return parse_poly(a, ring().ambient(), variables);
}

Poly ExperimentConfig::b_poly() const {
  return parse_poly(b, ring().ambient(), variables);
}

MonomialOrder ExperimentConfig::order() const {
  std::vector<std::uint32_t> prec;
  if (order_precedence.empty()) {
    prec = MonomialOrder::identity_precedence(
        static_cast<std::uint32_t>(variables.size()));
  } else {
    for (const auto& name : order_precedence) {
      auto it = std::find(variables.begin(), variables.end(), name);
      if (it == variables.end())
        throw config_error("order precedence names unknown variable: " + name);
      prec.push_back(static_cast<std::uint32_t>(it - variables.begin()));
    }
  }
  return order_kind == MonomialOrder::Kind::lex ? MonomialOrder::lex(prec)
                                                : MonomialOrder::grevlex(prec);
}

RabSpec ExperimentConfig::rab_spec() const {
  RingPresentation r = ring();
  return RabSpec(r, ideal_handle(), a_poly(), b_poly());
}

namespace {

const std::vector<std::string> kKnownOutputs = {"table", "gb_dump",
                                                "oracle_check", "second_coeff"};

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw config_error("config field '" + field + "': " + msg);
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw config_error("config must be a JSON object");

  ExperimentConfig cfg;
  try {
    cfg.characteristic = j.at("characteristic").get<std::uint32_t>();
    cfg.variables = j.at("variables").get<std::vector<std::string>>();
    cfg.quotient_ideal =
        j.value("quotient_ideal", std::vector<std::string>{});
    cfg.ideal = j.at("ideal").get<std::vector<std::string>>();
    cfg.a = j.value("a", std::string("0"));
    cfg.b = j.value("b", std::string("0"));
    if (j.contains("e_range")) {
      auto r = j.at("e_range").get<std::vector<std::uint32_t>>();
      if (r.size() != 2) fail("e_range", "expected [e_min, e_max]");
      cfg.e_min = r[0];
      cfg.e_max = r[1];
    }
    if (j.contains("order")) {
      const auto& o = j.at("order");
      std::string kind = o.value("kind", std::string("grevlex"));
      if (kind == "lex")
        cfg.order_kind = MonomialOrder::Kind::lex;
      else if (kind == "grevlex")
        cfg.order_kind = MonomialOrder::Kind::grevlex;
      else
        fail("order.kind", "expected lex or grevlex");
      cfg.order_precedence =
          o.value("precedence", std::vector<std::string>{});
    }
    cfg.outputs = j.value("outputs", std::vector<std::string>{"table"});
    cfg.e_cap = j.value("e_cap", 7u);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("invalid config: ") + e.what());
  }

  if (!is_prime(cfg.characteristic))
    throw config_error("NON_PRIME: characteristic " +
                       std::to_string(cfg.characteristic) + " is not prime");
  if (cfg.variables.empty()) fail("variables", "must be nonempty");
  if (cfg.ideal.empty())
    throw config_error("EMPTY_IDEAL: the ideal I must be nonzero");
  if (cfg.e_min > cfg.e_max) fail("e_range", "e_min exceeds e_max");
  if (cfg.e_max > cfg.e_cap)
    fail("e_range", "e_max " + std::to_string(cfg.e_max) +
                        " exceeds the safety cap " + std::to_string(cfg.e_cap) +
                        " (raise e_cap to acknowledge the runtime)");
  for (const auto& o : cfg.outputs)
    if (std::find(kKnownOutputs.begin(), kKnownOutputs.end(), o) ==
        kKnownOutputs.end())
      fail("outputs", "unknown output kind: " + o);

  // Parse everything now so bad polynomials are config errors, and check
  // the structural invariants of I.
  try {
    cfg.rab_spec();
  } catch (const config_error&) {
    throw;
  } catch (const error& e) {
    throw config_error(e.what());
  }
  return cfg;
}

std::string print_config(const ExperimentConfig& cfg) {
  ordered_json j;
  j["characteristic"] = cfg.characteristic;
  j["variables"] = cfg.variables;
  j["quotient_ideal"] = cfg.quotient_ideal;
  j["ideal"] = cfg.ideal;
  j["a"] = cfg.a;
  j["b"] = cfg.b;
  j["e_range"] = {cfg.e_min, cfg.e_max};
  j["order"] = {
      {"kind", cfg.order_kind == MonomialOrder::Kind::lex ? "lex" : "grevlex"},
      {"precedence", cfg.order_precedence}};
  j["outputs"] = cfg.outputs;
  j["e_cap"] = cfg.e_cap;
  return j.dump(2) + "\n";
}

bool operator==(const ExperimentConfig& x, const ExperimentConfig& y) {
  return x.characteristic == y.characteristic && x.variables == y.variables &&
         x.quotient_ideal == y.quotient_ideal && x.ideal == y.ideal &&
         x.a == y.a && x.b == y.b && x.e_min == y.e_min &&
         x.e_max == y.e_max && x.order_kind == y.order_kind &&
         x.order_precedence == y.order_precedence && x.outputs == y.outputs &&
         x.e_cap == y.e_cap;
}

std::vector<HKRow> run_experiment(const ExperimentConfig& cfg, unsigned jobs) {
  RabSpec spec = cfg.rab_spec();
  const std::uint32_t p = cfg.characteristic;
  std::vector<std::uint32_t> es;
  for (std::uint32_t e = cfg.e_min; e <= cfg.e_max; ++e) es.push_back(e);

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  std::vector<HKRow> rows(es.size());
  auto compute = [&](std::size_t k) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < es[k]; ++i) q *= p;
    try {
      rows[k] = hk_rab(spec, q);
    } catch (const error& err) {
      throw error("row e=" + std::to_string(es[k]) + ": " + err.what());
    }
  };

  if (jobs <= 1 || es.size() <= 1) {
    for (std::size_t k = 0; k < es.size(); ++k) compute(k);
  } else {
    std::vector<std::future<void>> futs;
    futs.reserve(es.size());
    for (std::size_t k = 0; k < es.size(); ++k)
      futs.push_back(std::async(std::launch::async, compute, k));
    for (auto& f : futs) f.get();
  }
  return rows;
}

namespace {

Rational f_value(const HKRow& row, std::uint32_t d) {
  __int128 qd = 1;
  for (std::uint32_t k = 0; k < d; ++k) qd *= static_cast<__int128>(row.q);
  return Rational(static_cast<__int128>(row.total), qd);
}

}  // namespace

std::string emit_csv(const ExperimentConfig& cfg,
                     const std::vector<HKRow>& rows) {
  const std::uint32_t d = cfg.ring().dimension();
  std::string out = "e,q,base,module,correction,total,f_e,bq_class\n";
  for (const auto& r : rows) {
    out += std::to_string(r.e) + "," + std::to_string(r.q) + "," +
           std::to_string(r.base) + "," + std::to_string(r.module_len) + "," +
           std::to_string(r.correction) + "," + std::to_string(r.total) + "," +
           f_value(r, d).fraction_str() + "," + to_string(r.bq_class) + "\n";
  }
  return out;
}

std::string emit_json(const ExperimentConfig& cfg,
                      const std::vector<HKRow>& rows) {
  const std::uint32_t d = cfg.ring().dimension();
  ordered_json j;
  j["characteristic"] = cfg.characteristic;
  j["dimension"] = d;
  j["rows"] = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row;
    row["e"] = r.e;
    row["q"] = r.q;
    row["base"] = r.base;
    row["module"] = r.module_len;
    row["correction"] = r.correction;
    row["total"] = r.total;
    row["f_e"] = f_value(r, d).fraction_str();
    row["bq_class"] = to_string(r.bq_class);
    j["rows"].push_back(row);
  }

  auto wants = [&](const char* kind) {
    return std::find(cfg.outputs.begin(), cfg.outputs.end(), kind) !=
           cfg.outputs.end();
  };
  if (wants("gb_dump")) {
    ordered_json dumps = ordered_json::object();
    for (const auto& r : rows)
      dumps[std::to_string(r.q)] = gb_dump(cfg, r.q);
    j["gb_dump"] = dumps;
  }
  if (wants("oracle_check")) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : oracle_check(cfg)) {
      checks.push_back({{"e", c.e},
                        {"formula", c.formula_total},
                        {"oracle", c.oracle_total},
                        {"match", c.match}});
    }
    j["oracle_check"] = checks;
  }
  if (wants("second_coeff")) {
    if (d == 1 && rows.size() >= 4) {
      SecondCoeffReport rep = second_coeff_analyze(rows);
      j["second_coeff"] = ordered_json::parse(second_coeff_json(rep));
    } else {
      j["second_coeff"] = nullptr;
    }
  }
  return j.dump(2) + "\n";
}

std::vector<std::string> gb_dump(const ExperimentConfig& cfg,
                                 std::uint64_t q) {
  RingPresentation ring = cfg.ring();
  IdealHandle mq = frobenius_power(IdealHandle::maximal(ring), q);
  GroebnerBasis G = reduced_gb(mq.gens_with_j(), cfg.order());
  std::vector<std::string> out;
  for (const auto& g : G.elements())
    out.push_back(poly_to_string(g, cfg.variables));
  return out;
}

std::vector<OracleCheckRow> oracle_check(const ExperimentConfig& cfg) {
  RabSpec spec = cfg.rab_spec();
  FiniteModel model = FiniteModel::build(spec);
  std::vector<OracleCheckRow> out;
  for (std::uint32_t e = cfg.e_min; e <= cfg.e_max; ++e) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= cfg.characteristic;
    HKRow row = hk_rab(spec, q);
    LengthValue direct = oracle_hk_rab(model, spec, q);
    out.push_back(
        {e, row.total, direct.value(), row.total == direct.value()});
  }
  return out;
}

std::vector<HKRow> rows_from_json_report(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("invalid report JSON: ") + e.what());
  }
  if (!j.contains("rows") || !j["rows"].is_array())
    throw config_error("report has no rows array");
  std::vector<HKRow> rows;
  for (const auto& r : j["rows"]) {
    HKRow row;
    row.e = r.at("e").get<std::uint32_t>();
    row.q = r.at("q").get<std::uint64_t>();
    row.base = r.value("base", 0ull);
    row.module_len = r.value("module", 0ull);
    row.correction = r.value("correction", 0ull);
    row.total = r.at("total").get<std::uint64_t>();
    std::string cls = r.value("bq_class", std::string("UNIT"));
    row.bq_class = cls == "ZERO" ? BqClass::ZERO
                   : cls == "UNIT" ? BqClass::UNIT
                                   : BqClass::NONUNIT_NONZERO;
    rows.push_back(row);
  }
  return rows;
}

std::optional<std::uint32_t> report_dimension(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("invalid report JSON: ") + e.what());
  }
  if (j.contains("dimension") && j["dimension"].is_number_unsigned())
    return j["dimension"].get<std::uint32_t>();
  return std::nullopt;
}

std::string second_coeff_json(const SecondCoeffReport& report) {
  ordered_json j;
  if (report.period) {
    j["alpha"] = report.alpha.str();
    j["period"] = *report.period;
    j["anchor_e"] = report.anchor_e;
    ordered_json cyc = ordered_json::array();
    for (const auto& c : report.residual_cycle) cyc.push_back(c.str());
    j["residuals"] = cyc;
  } else {
    j["period"] = nullptr;
    j["note"] = "APERIODIC within the computed window";
  }
  return j.dump(2) + "\n";
}

}  // namespace hk
