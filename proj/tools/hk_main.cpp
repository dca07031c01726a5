#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hk/config.hpp"
#include "hk/oracle.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hk::config_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw hk::error("cannot write file: " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Kunz functions of local rings of prime "
               "characteristic and of the Rees-quotient family R(I)_{a,b}"};
  app.require_subcommand(1);

  std::string config_path, out_path, format = "csv", report_path;
  std::uint64_t q_arg = 0;
  unsigned jobs = 0;
  int emax_override = -1;
  int ecap_override = -1;

  auto* run = app.add_subcommand("run", "compute a Hilbert-Kunz table");
  run->add_option("config", config_path, "experiment config (JSON)")
      ->required();
  run->add_option("--emax", emax_override, "override the e-range maximum");
  run->add_option("--e-cap", ecap_override,
                  "raise the safety cap on e (acknowledges the runtime)");
  run->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--out", out_path, "output path (default stdout)");
  run->add_option("--jobs", jobs, "worker threads (1 = serial)");

  auto* gb = app.add_subcommand(
      "gb", "dump the reduced Groebner basis of J + m^[q]");
  gb->add_option("config", config_path, "experiment config (JSON)")
      ->required();
  gb->add_option("--q", q_arg, "the Frobenius power q = p^e")->required();

  auto* oracle = app.add_subcommand(
      "oracle", "compare the formula against the finite-model oracle "
                "(Artinian base rings)");
  oracle->add_option("config", config_path, "experiment config (JSON)")
      ->required();

  auto* analyze = app.add_subcommand(
      "analyze", "second-coefficient periodicity of a JSON report");
  analyze->add_option("report", report_path, "report produced by run --format json")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      hk::ExperimentConfig cfg = hk::parse_config(slurp(config_path));
      if (ecap_override >= 0)
        cfg.e_cap = static_cast<std::uint32_t>(ecap_override);
      if (emax_override >= 0) {
        cfg.e_max = static_cast<std::uint32_t>(emax_override);
        if (cfg.e_max > cfg.e_cap)
          throw hk::config_error(
              "--emax exceeds the config's e_cap safety limit");
        if (cfg.e_min > cfg.e_max) cfg.e_min = cfg.e_max;
      }
      std::vector<hk::HKRow> rows = hk::run_experiment(cfg, jobs);
      write_out(format == "csv" ? hk::emit_csv(cfg, rows)
                                : hk::emit_json(cfg, rows),
                out_path);
    } else if (*gb) {
      hk::ExperimentConfig cfg = hk::parse_config(slurp(config_path));
      for (const auto& line : hk::gb_dump(cfg, q_arg))
        std::cout << line << "\n";
    } else if (*oracle) {
      hk::ExperimentConfig cfg = hk::parse_config(slurp(config_path));
      bool all_ok = true;
      for (const auto& row : hk::oracle_check(cfg)) {
        std::cout << "e=" << row.e << " formula=" << row.formula_total
                  << " oracle=" << row.oracle_total
                  << (row.match ? " OK" : " MISMATCH") << "\n";
        all_ok = all_ok && row.match;
      }
      if (!all_ok) return 2;
    } else if (*analyze) {
      std::string text = slurp(report_path);
      auto d = hk::report_dimension(text);
      if (d && *d != 1)
        throw hk::precondition_error(
            "second-coefficient analysis is defined for dimension 1, "
            "report has dimension " + std::to_string(*d));
      hk::SecondCoeffReport rep =
          hk::second_coeff_analyze(hk::rows_from_json_report(text));
      std::cout << hk::second_coeff_json(rep);
    }
  } catch (const hk::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
