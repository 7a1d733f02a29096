#pragma once

// Declarative run configuration, the gate/sweep drivers behind the CLI
// subcommands, and deterministic report/CSV rendering.

#include <cstdint>
#include <string>
#include <vector>

#include "holodd/holonomy.hpp"
#include "holodd/noise.hpp"

namespace holodd {

struct run_config {
  std::string gate = "one_qubit";      // one_qubit | two_qubit
  double theta = 1.5707963267948966;   // pi/2: the x-axis gate showcase
  double phi = 0.0;
  std::string envelope = "constant";   // constant | sine
  double total_time = 1.0;
  long steps = 200;                    // time-ordering steps per pulse interval
  std::string schedule = "none";       // none | xyz4
  double tau = 0.0;                    // 0 => derived from cycles
  int cycles = 0;                      // 0 => derived (16 when schedule = xyz4)
  double eps = -1.0;                   // < 0 => default 0.05*pi/T
  double eta = -1.0;                   // < 0 => default 0.1*pi/T
  int bath_dim = 4;
  int bath_state = 0;                  // initial bath basis state for open runs
  std::string variant = "independent";
  std::uint64_t seed = 42;
  std::string out;                     // empty => stdout
  std::vector<double> tau_grid;        // empty => 8-point log grid 1e-3..1e-1
  int n_seeds = 5;
  bool fixed_total_time = false;       // sweep: keep T, vary cycle count per row
  bool interaction_only = false;       // sweep: per-cycle defect mode (J = 0, eta = 0)
};

// JSON config loading; CLI flags are applied on top by the front end
run_config config_from_json_text(const std::string& text);
run_config load_config_file(const std::string& path);

// materialize defaults and validate; throws config_error on bad fields
run_config resolve_gate_config(run_config cfg);
run_config resolve_sweep_config(run_config cfg);

struct gate_run_result {
  run_config config;  // resolved
  bool open = false;
  cmatrix logical_gate;
  double fidelity = 0.0;
  double leakage = 0.0;
  double cyclic_residual = 0.0;
  double pt_residual = 0.0;
  double gamma = 0.0;
  double gamma_target = 0.0;
  // populated on open runs; the *_nodd values always refer to the unprotected run
  double ensemble_fidelity_dd = -1.0;
  double ensemble_fidelity_nodd = -1.0;
  double ensemble_leakage_dd = -1.0;
  double ensemble_leakage_nodd = -1.0;
};

gate_run_result run_gate(const run_config& raw);
std::string render_report(const gate_run_result& result);

struct sweep_row {
  double tau = 0.0;
  double infidelity_dd = 0.0;
  double infidelity_nodd = 0.0;
  double leakage_dd = 0.0;
  double leakage_nodd = 0.0;
  std::uint64_t seed = 0;
};

std::vector<sweep_row> run_dd_sweep(const run_config& raw);
std::string render_csv(const std::vector<sweep_row>& rows);

// mean state fidelity and logical-span leakage over a seeded ensemble of
// pseudo-random logical inputs sent through the joint propagator
struct ensemble_metrics {
  double mean_fidelity = 0.0;
  double mean_leakage = 0.0;
};
ensemble_metrics open_run_metrics(const cmatrix& joint_u, const logical_encoding& enc,
                                  int env_dim, const cmatrix& target_gate,
                                  std::uint64_t state_seed, int n_states = 20,
                                  int bath_state = 0);

// single-cycle decoupled defect ||U_cycle - I|| and the undecoupled defect
// over the same duration, with no system or bath self-Hamiltonian
struct cycle_defects {
  double dd = 0.0;
  double nodd = 0.0;
};
cycle_defects dd_cycle_defect(double tau, std::uint64_t seed, int n_qubits, int env_dim,
                              double eps, noise_variant variant = noise_variant::independent);

}  // namespace holodd
