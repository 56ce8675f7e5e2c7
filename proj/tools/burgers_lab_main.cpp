// Experiment runner: exact exponent calculus, decay simulations, and the
// verification suites for the multi-dimensional Burgers entropy solver.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "burgers/analysis.hpp"
#include "burgers/config.hpp"
#include "burgers/exponents.hpp"
#include "burgers/solver.hpp"
#include "burgers/verify.hpp"

namespace {

using namespace burgers;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitError = 2;

int cmd_exponents(int dim, const std::string& gamma_str, int iters,
                  const std::string& json_path) {
  auto es = exponents::ExponentSet::for_dimension(dim);
  auto interp = exponents::interpolation_check(dim);
  bool invar = exponents::invariance_exponent_check(dim);

  std::cout << "dim = " << dim << "\n";
  std::cout << "gamma0 = " << es.gamma0.to_string() << "\n";
  std::cout << "p = " << es.p.to_string() << "\n";
  std::cout << "gamma_serre = " << es.gamma_serre.to_string() << "\n";
  std::cout << "delta_serre = " << es.delta_serre.to_string() << "\n";
  std::cout << "interpolation_check = " << (interp.ok ? "pass" : "fail") << "\n";
  std::cout << "invariance_check = " << (invar ? "pass" : "fail") << "\n";

  nlohmann::json j{{"dim", dim},
                   {"gamma0", es.gamma0.to_string()},
                   {"p", es.p.to_string()},
                   {"gamma_serre", es.gamma_serre.to_string()},
                   {"delta_serre", es.delta_serre.to_string()},
                   {"interpolation_check", interp.ok},
                   {"invariance_check", invar}};

  if (!gamma_str.empty()) {
    Rational gamma = Rational::parse(gamma_str);
    Rational th = exponents::theta(dim, gamma);
    std::cout << "gamma = " << gamma.to_string() << "\n";
    std::cout << "theta = " << th.to_string() << "\n";
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 0; k <= iters; ++k) {
      auto ledger = exponents::compound_partial(dim, gamma, k);
      std::cout << "ledger k=" << k
                << " l1_exp=" << ledger.l1_exponent.to_string()
                << " t_exp=" << ledger.t_exponent.to_string()
                << " dyadic_exp=" << ledger.dyadic_exponent.to_string()
                << " residual=" << ledger.residual_exponent.to_string() << "\n";
      rows.push_back({{"k", k},
                      {"l1_exp", ledger.l1_exponent.to_string()},
                      {"t_exp", ledger.t_exponent.to_string()},
                      {"dyadic_exp", ledger.dyadic_exponent.to_string()},
                      {"residual", ledger.residual_exponent.to_string()}});
    }
    auto lim = exponents::compound_limit(dim, gamma);
    std::cout << "limit l1_exp=" << lim.l1_exponent.to_string()
              << " t_exp=" << lim.t_exponent.to_string()
              << " dyadic_exp=" << lim.dyadic_exponent.to_string() << "\n";
    j["gamma"] = gamma.to_string();
    j["theta"] = th.to_string();
    j["ledger"] = rows;
    j["limit"] = {{"l1_exp", lim.l1_exponent.to_string()},
                  {"t_exp", lim.t_exponent.to_string()},
                  {"dyadic_exp", lim.dyadic_exponent.to_string()}};
  }

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

Trajectory run_config(const RunConfig& cfg, Grid& grid_out) {
  grid_out = cfg.make_grid();
  return solve_to(cfg.init, grid_out, cfg.t_final, cfg.cfl, cfg.sample_times,
                  cfg.flux);
}

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  writer(out);
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 const std::string& flux_override) {
  RunConfig cfg = RunConfig::parse_file(config_path);
  if (!flux_override.empty()) cfg.flux = flux_choice_from_string(flux_override);
  std::filesystem::create_directories(out_dir);
  Grid grid;
  Trajectory traj = run_config(cfg, grid);
  auto series = analysis::DecaySeries::from_trajectory(cfg.dim, traj);
  write_file(std::filesystem::path(out_dir) / cfg.series_path,
             [&](std::ostream& os) { series.write_csv(os); });
  write_file(std::filesystem::path(out_dir) / "field.txt",
             [&](std::ostream& os) { write_field_text(traj.final_field, os); });
  std::cout << "wrote " << (std::filesystem::path(out_dir) / cfg.series_path).string()
            << " and field.txt (" << traj.dt_history.size() << " steps)\n";
  return kExitOk;
}

std::string gamma_file_tag(const Rational& g) {
  std::string s = g.to_string();
  for (char& c : s)
    if (c == '/') c = '_';
  return s;
}

int cmd_decay(const std::string& config_path, const std::string& out_dir,
              const std::string& flux_override) {
  RunConfig cfg = RunConfig::parse_file(config_path);
  if (!flux_override.empty()) cfg.flux = flux_choice_from_string(flux_override);
  std::filesystem::create_directories(out_dir);
  Grid grid;
  Trajectory traj = run_config(cfg, grid);
  auto series = analysis::DecaySeries::from_trajectory(cfg.dim, traj);
  double wlo = cfg.window_lo;
  double whi = cfg.window_hi > 0.0 ? cfg.window_hi : cfg.t_final;

  write_file(std::filesystem::path(out_dir) / cfg.series_path,
             [&](std::ostream& os) { series.write_csv(os); });
  auto thm1 = analysis::thm1_ratio(series, wlo, whi);
  write_file(std::filesystem::path(out_dir) / (cfg.report_prefix + "_thm1.txt"),
             [&](std::ostream& os) { thm1.write_text(os); });
  auto serre = analysis::serre_ratio(series, wlo, whi);
  write_file(std::filesystem::path(out_dir) / (cfg.report_prefix + "_serre.txt"),
             [&](std::ostream& os) { serre.write_text(os); });
  for (const Rational& g : cfg.eq3_gammas) {
    auto eq3 = analysis::eq3_ratio(series, g, wlo, whi);
    write_file(std::filesystem::path(out_dir) /
                   (cfg.report_prefix + "_eq3_" + gamma_file_tag(g) + ".txt"),
               [&](std::ostream& os) { eq3.write_text(os); });
  }
  std::cout << "thm1 sup_ratio = " << thm1.sup_ratio << "\n";
  std::cout << "serre sup_ratio = " << serre.sup_ratio << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite) {
  std::vector<verify::CheckResult> results;
  if (suite == "all") {
    for (const auto& name : verify::suite_names()) {
      auto part = verify::verify_suite(name);
      results.insert(results.end(), part.begin(), part.end());
    }
  } else {
    results = verify::verify_suite(suite);
  }
  for (const auto& r : results)
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.detail << "\n";
  return verify::all_pass(results) ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy-solver laboratory for the multi-dimensional Burgers equation"};
  app.require_subcommand(1);

  auto* exp_cmd =
      app.add_subcommand("exponents", "exact exponent calculus for a dimension");
  int dim = 1;
  std::string gamma_str, json_path;
  int iters = 5;
  exp_cmd->add_option("--dim", dim, "spatial dimension (>= 1)")->required();
  exp_cmd->add_option("--gamma", gamma_str,
                      "exact rational in (0, gamma0), e.g. 1/8");
  exp_cmd->add_option("--iters", iters, "compound ledger rows to print");
  exp_cmd->add_option("--json", json_path, "also write a JSON summary here");

  std::string config_path, out_dir = ".", flux_override, suite;
  auto* sim_cmd = app.add_subcommand("simulate", "run a config, dump series + field");
  sim_cmd->add_option("--config", config_path, "config file")->required();
  sim_cmd->add_option("--out", out_dir, "output directory");
  sim_cmd->add_option("--flux", flux_override, "eo | godunov");

  auto* decay_cmd =
      app.add_subcommand("decay", "run a config, write series and bound reports");
  decay_cmd->add_option("--config", config_path, "config file")->required();
  decay_cmd->add_option("--out", out_dir, "output directory");
  decay_cmd->add_option("--flux", flux_override, "eo | godunov");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd
      ->add_option("--suite", suite,
                   "exponents | flux | oned | twod | semigroup | scaling | all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (app.got_subcommand(exp_cmd))
      return cmd_exponents(dim, gamma_str, iters, json_path);
    if (app.got_subcommand(sim_cmd))
      return cmd_simulate(config_path, out_dir, flux_override);
    if (app.got_subcommand(decay_cmd))
      return cmd_decay(config_path, out_dir, flux_override);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(suite);
  } catch (const burgers::ContaminationError& e) {
    std::cerr << "error: contamination: " << e.what() << "\n";
    return kExitError;
  } catch (const burgers::CflError& e) {
    std::cerr << "error: cfl: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: runtime: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
