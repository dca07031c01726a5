#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hk/config.hpp"
#include "hk/oracle.hpp"

namespace py = pybind11;

namespace {

py::dict row_to_dict(const hk::HKRow& r, std::uint32_t d) {
  py::dict out;
  out["e"] = r.e;
  out["q"] = r.q;
  out["base"] = r.base;
  out["module"] = r.module_len;
  out["correction"] = r.correction;
  out["total"] = r.total;
  __int128 qd = 1;
  for (std::uint32_t k = 0; k < d; ++k) qd *= static_cast<__int128>(r.q);
  out["f_e"] = hk::Rational(static_cast<__int128>(r.total), qd).fraction_str();
  out["bq_class"] = hk::to_string(r.bq_class);
  return out;
}

hk::RingPresentation make_ring(std::uint32_t p,
                               const std::vector<std::string>& vars,
                               const std::vector<std::string>& jgens) {
  hk::Ambient amb{p, static_cast<std::uint32_t>(vars.size())};
  std::vector<hk::Poly> js;
  for (const auto& s : jgens) js.push_back(hk::parse_poly(s, amb, vars));
  return hk::RingPresentation(hk::PrimeChar(p), vars, std::move(js));
}

hk::MonomialOrder make_order(const hk::RingPresentation& ring,
                             const std::string& kind) {
  auto prec = hk::MonomialOrder::identity_precedence(ring.nvars());
  if (kind == "lex") return hk::MonomialOrder::lex(prec);
  if (kind == "grevlex") return hk::MonomialOrder::grevlex(prec);
  throw hk::config_error("order must be lex or grevlex");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hilbert-Kunz computations for local rings of prime "
            "characteristic and Rees-quotient families R(I)_{a,b}";

  // Translators run newest-first, so the subclass must come second.
  py::register_exception<hk::error>(m, "EngineError");
  py::register_exception<hk::config_error>(m, "ConfigError");

  m.def(
      "reduced_groebner",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, const std::string& order) {
        hk::RingPresentation ring = make_ring(p, vars, {});
        std::vector<hk::Poly> gs;
        for (const auto& s : gens)
          gs.push_back(hk::parse_poly(s, ring.ambient(), vars));
        hk::GroebnerBasis G = hk::reduced_gb(gs, make_order(ring, order));
        std::vector<std::string> out;
        for (const auto& g : G.elements())
          out.push_back(hk::poly_to_string(g, vars));
        return out;
      },
      py::arg("p"), py::arg("variables"), py::arg("generators"),
      py::arg("order") = "grevlex",
      "Reduced Groebner basis, elements in the polynomial text syntax.");

  m.def(
      "normal_form",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::string& f, const std::vector<std::string>& gens,
         const std::string& order) {
        hk::RingPresentation ring = make_ring(p, vars, {});
        std::vector<hk::Poly> gs;
        for (const auto& s : gens)
          gs.push_back(hk::parse_poly(s, ring.ambient(), vars));
        hk::Poly ff = hk::parse_poly(f, ring.ambient(), vars);
        hk::Poly nf =
            hk::normal_form(ff, hk::reduced_gb(gs, make_order(ring, order)));
        return hk::poly_to_string(nf, vars);
      },
      py::arg("p"), py::arg("variables"), py::arg("f"), py::arg("generators"),
      py::arg("order") = "grevlex");

  m.def(
      "local_length",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& jgens,
         const std::vector<std::string>& agens) -> py::object {
        hk::RingPresentation ring = make_ring(p, vars, jgens);
        std::vector<hk::Poly> gs;
        for (const auto& s : agens)
          gs.push_back(hk::parse_poly(s, ring.ambient(), vars));
        hk::LengthValue l =
            hk::local_length(hk::IdealHandle(ring, std::move(gs)));
        if (!l.is_finite()) return py::none();
        return py::int_(l.value());
      },
      py::arg("p"), py::arg("variables"), py::arg("quotient_ideal"),
      py::arg("ideal"),
      "Length of the quotient at the origin; None when infinite.");

  m.def(
      "lucas_pair",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& jgens, const std::string& a,
         const std::string& b, std::uint64_t q) {
        hk::RingPresentation ring = make_ring(p, vars, jgens);
        hk::Poly pa = hk::parse_poly(a, ring.ambient(), vars);
        hk::Poly pb = hk::parse_poly(b, ring.ambient(), vars);
        hk::LucasPair lp = hk::lucas_pair(pa, pb, q, ring);
        py::dict out;
        out["A_q"] = hk::poly_to_string(lp.a_q, vars);
        out["B_q"] = hk::poly_to_string(lp.b_q, vars);
        out["bq_class"] = hk::to_string(hk::classify_bq(lp, ring));
        return out;
      },
      py::arg("p"), py::arg("variables"), py::arg("quotient_ideal"),
      py::arg("a"), py::arg("b"), py::arg("q"));

  m.def(
      "hk_table",
      [](const std::string& config_json, unsigned jobs) {
        hk::ExperimentConfig cfg = hk::parse_config(config_json);
        std::uint32_t d = cfg.ring().dimension();
        py::list rows;
        for (const auto& r : hk::run_experiment(cfg, jobs))
          rows.append(row_to_dict(r, d));
        return rows;
      },
      py::arg("config_json"), py::arg("jobs") = 1,
      "Hilbert-Kunz table rows for a JSON experiment config.");

  m.def(
      "report_csv",
      [](const std::string& config_json, unsigned jobs) {
        hk::ExperimentConfig cfg = hk::parse_config(config_json);
        return hk::emit_csv(cfg, hk::run_experiment(cfg, jobs));
      },
      py::arg("config_json"), py::arg("jobs") = 1);

  m.def(
      "report_json",
      [](const std::string& config_json, unsigned jobs) {
        hk::ExperimentConfig cfg = hk::parse_config(config_json);
        return hk::emit_json(cfg, hk::run_experiment(cfg, jobs));
      },
      py::arg("config_json"), py::arg("jobs") = 1);

  m.def(
      "gb_dump",
      [](const std::string& config_json, std::uint64_t q) {
        return hk::gb_dump(hk::parse_config(config_json), q);
      },
      py::arg("config_json"), py::arg("q"),
      "Reduced Groebner basis of J + m^[q] in the config's order.");

  m.def(
      "oracle_check",
      [](const std::string& config_json) {
        py::list out;
        for (const auto& c : hk::oracle_check(hk::parse_config(config_json))) {
          py::dict row;
          row["e"] = c.e;
          row["formula"] = c.formula_total;
          row["oracle"] = c.oracle_total;
          row["match"] = c.match;
          out.append(row);
        }
        return out;
      },
      py::arg("config_json"),
      "Formula totals vs the finite-model oracle (Artinian base rings).");

  m.def(
      "second_coeff",
      [](const std::string& report_json) {
        auto d = hk::report_dimension(report_json);
        if (d && *d != 1)
          throw hk::precondition_error(
              "second-coefficient analysis is defined for dimension 1");
        hk::SecondCoeffReport rep =
            hk::second_coeff_analyze(hk::rows_from_json_report(report_json));
        py::dict out;
        if (rep.period) {
          out["alpha"] = rep.alpha.str();
          out["period"] = *rep.period;
          out["anchor_e"] = rep.anchor_e;
          py::list cyc;
          for (const auto& c : rep.residual_cycle) cyc.append(c.str());
          out["residuals"] = cyc;
        } else {
          out["period"] = py::none();
        }
        return out;
      },
      py::arg("report_json"),
      "Second-coefficient periodicity of a JSON report.");

  m.attr("__version__") = "0.1.0";
}
