// CLI front end: closed/open gate simulations, DD sweeps and the
// verification suite, driven by flags or a JSON config file.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holodd/harness.hpp"
#include "holodd/verify.hpp"

namespace {

struct flag_values {
  std::string gate = "one_qubit";
  double theta = 0.0, phi = 0.0, total_time = 0.0, tau = 0.0, eps = 0.0, eta = 0.0;
  long steps = 0;
  int cycles = 0, bath_dim = 0, n_seeds = 0;
  std::string envelope, schedule, variant, out, config_path;
  std::uint64_t seed = 0;
  std::vector<double> tau_grid;
  bool fixed_total_time = false;
  bool interaction_only = false;
};

void add_common_flags(CLI::App* sub, flag_values& v) {
  sub->add_option("--theta", v.theta, "gate angle theta in radians");
  sub->add_option("--phi", v.phi, "gate angle phi in radians");
  sub->add_option("--envelope", v.envelope, "pulse envelope: constant|sine");
  sub->add_option("--total-time", v.total_time, "gate evolution time T");
  sub->add_option("--tau", v.tau, "decoupling interval duration");
  sub->add_option("--cycles", v.cycles, "decoupling cycle count");
  sub->add_option("--schedule", v.schedule, "decoupling schedule: none|xyz4");
  sub->add_option("--eps", v.eps, "bath coupling strength (0 = closed system)");
  sub->add_option("--eta", v.eta, "bath self-Hamiltonian strength");
  sub->add_option("--bath-dim", v.bath_dim, "bath Hilbert-space dimension");
  sub->add_option("--variant", v.variant, "noise: independent|collective|dephasing");
  sub->add_option("--seed", v.seed, "base seed for noise and state ensembles");
  sub->add_option("--steps", v.steps, "time-ordering steps per pulse interval");
  sub->add_option("--config", v.config_path, "JSON config file; flags override it");
  sub->add_option("--out", v.out, "output file (default stdout)");
}

bool given(const CLI::App* sub, const std::string& name) {
  const CLI::Option* opt = sub->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

holodd::run_config assemble(const CLI::App* sub, const flag_values& v) {
  holodd::run_config cfg;
  if (sub->count("--config")) cfg = holodd::load_config_file(v.config_path);
  if (given(sub, "--gate")) cfg.gate = v.gate;
  if (sub->count("--theta")) cfg.theta = v.theta;
  if (sub->count("--phi")) cfg.phi = v.phi;
  if (sub->count("--envelope")) cfg.envelope = v.envelope;
  if (sub->count("--total-time")) cfg.total_time = v.total_time;
  if (sub->count("--tau")) cfg.tau = v.tau;
  if (sub->count("--cycles")) cfg.cycles = v.cycles;
  if (sub->count("--schedule")) cfg.schedule = v.schedule;
  if (sub->count("--eps")) cfg.eps = v.eps;
  if (sub->count("--eta")) cfg.eta = v.eta;
  if (sub->count("--bath-dim")) cfg.bath_dim = v.bath_dim;
  if (sub->count("--variant")) cfg.variant = v.variant;
  if (sub->count("--seed")) cfg.seed = v.seed;
  if (sub->count("--steps")) cfg.steps = v.steps;
  if (sub->count("--out")) cfg.out = v.out;
  if (given(sub, "--tau-grid")) cfg.tau_grid = v.tau_grid;
  if (given(sub, "--n-seeds")) cfg.n_seeds = v.n_seeds;
  if (given(sub, "--fixed-total-time")) cfg.fixed_total_time = v.fixed_total_time;
  if (given(sub, "--interaction-only")) cfg.interaction_only = v.interaction_only;
  return cfg;
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 1;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamical-decoupling-protected holonomic gate simulator"};
  app.require_subcommand(1);

  flag_values v1, v2, vs;
  CLI::App* gate1 = app.add_subcommand("gate1", "simulate the one-logical-qubit gate");
  add_common_flags(gate1, v1);
  CLI::App* gate2 = app.add_subcommand("gate2", "simulate the two-logical-qubit gate");
  add_common_flags(gate2, v2);

  CLI::App* sweep = app.add_subcommand("ddsweep", "sweep the decoupling interval tau");
  add_common_flags(sweep, vs);
  sweep->add_option("--gate", vs.gate, "one_qubit|two_qubit");
  sweep->add_option("--tau-grid", vs.tau_grid, "explicit tau values")->delimiter(',');
  sweep->add_option("--n-seeds", vs.n_seeds, "noise seeds per tau");
  sweep->add_flag("--fixed-total-time", vs.fixed_total_time,
                  "keep T fixed and vary the cycle count per row");
  sweep->add_flag("--interaction-only", vs.interaction_only,
                  "per-cycle defect mode: no gate Hamiltonian, no bath self-energy");

  CLI::App* verify = app.add_subcommand("verify", "run every invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gate1->parsed() || gate2->parsed()) {
      const bool one = gate1->parsed();
      holodd::run_config cfg = assemble(one ? gate1 : gate2, one ? v1 : v2);
      cfg.gate = one ? "one_qubit" : "two_qubit";
      const holodd::gate_run_result result = holodd::run_gate(cfg);
      return write_output(result.config.out, holodd::render_report(result));
    }
    if (sweep->parsed()) {
      const holodd::run_config cfg = assemble(sweep, vs);
      const auto rows = holodd::run_dd_sweep(cfg);
      return write_output(cfg.out, holodd::render_csv(rows));
    }
    if (verify->parsed()) {
      const auto results = holodd::run_all_checks();
      const int failures = holodd::report_checks(results, std::cout);
      if (failures > 0) {
        std::cout << failures << " suite(s) failed\n";
        return 1;
      }
      std::cout << "all " << results.size() << " suites passed\n";
      return 0;
    }
  } catch (const holodd::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
