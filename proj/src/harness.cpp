#include "holodd/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "holodd/evolution.hpp"

namespace holodd {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double pi = 3.14159265358979323846;
constexpr long closed_area_steps = 200000;   // scalar quadrature for closed runs
constexpr int pt_samples = 100;
constexpr std::uint64_t state_seed_salt = 0x9E3779B97F4A7C15ULL;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

envelope_kind parse_envelope(const std::string& name) {
  if (name == "constant") return envelope_kind::constant;
  if (name == "sine") return envelope_kind::sine;
  throw config_error("config field 'envelope': expected constant|sine, got '" + name + "'");
}

// ---- config loading ------------------------------------------------------

template <typename T>
T get_field(const ordered_json& j, const std::string& key, const T& fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw config_error("config field '" + key + "': " + e.what());
  }
}

void reject_unknown_keys(const ordered_json& j, const std::vector<std::string>& allowed,
                         const std::string& scope) {
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
      throw config_error("unknown config key '" + scope + item.key() + "'");
  }
}

}  // namespace

run_config config_from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error(std::string("config parse error: ") + e.what());
  }
  reject_unknown_keys(j,
                      {"gate", "theta", "phi", "envelope", "total_time", "steps", "schedule",
                       "tau", "cycles", "noise", "out", "tau_grid", "n_seeds",
                       "fixed_total_time", "interaction_only"},
                      "");
  run_config cfg;
  cfg.gate = get_field<std::string>(j, "gate", cfg.gate);
  cfg.theta = get_field<double>(j, "theta", cfg.theta);
  cfg.phi = get_field<double>(j, "phi", cfg.phi);
  cfg.envelope = get_field<std::string>(j, "envelope", cfg.envelope);
  cfg.total_time = get_field<double>(j, "total_time", cfg.total_time);
  cfg.steps = get_field<long>(j, "steps", cfg.steps);
  cfg.schedule = get_field<std::string>(j, "schedule", cfg.schedule);
  cfg.tau = get_field<double>(j, "tau", cfg.tau);
  cfg.cycles = get_field<int>(j, "cycles", cfg.cycles);
  cfg.out = get_field<std::string>(j, "out", cfg.out);
  cfg.tau_grid = get_field<std::vector<double>>(j, "tau_grid", cfg.tau_grid);
  cfg.n_seeds = get_field<int>(j, "n_seeds", cfg.n_seeds);
  cfg.fixed_total_time = get_field<bool>(j, "fixed_total_time", cfg.fixed_total_time);
  cfg.interaction_only = get_field<bool>(j, "interaction_only", cfg.interaction_only);
  if (j.contains("noise")) {
    const ordered_json& n = j.at("noise");
    if (!n.is_object()) throw config_error("config field 'noise': expected an object");
    reject_unknown_keys(n, {"eps", "eta", "bath_dim", "bath_state", "variant", "seed"},
                        "noise.");
    cfg.eps = get_field<double>(n, "eps", cfg.eps);
    cfg.eta = get_field<double>(n, "eta", cfg.eta);
    cfg.bath_dim = get_field<int>(n, "bath_dim", cfg.bath_dim);
    cfg.bath_state = get_field<int>(n, "bath_state", cfg.bath_state);
    cfg.variant = get_field<std::string>(n, "variant", cfg.variant);
    cfg.seed = get_field<std::uint64_t>(n, "seed", cfg.seed);
  }
  return cfg;
}

run_config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json_text(buf.str());
}

// ---- resolution ----------------------------------------------------------

namespace {

void resolve_common(run_config& cfg) {
  if (cfg.gate != "one_qubit" && cfg.gate != "two_qubit")
    throw config_error("config field 'gate': expected one_qubit|two_qubit, got '" +
                       cfg.gate + "'");
  parse_envelope(cfg.envelope);
  if (!(cfg.total_time > 0.0)) throw config_error("config field 'total_time': must be > 0");
  if (cfg.steps < 1) throw config_error("config field 'steps': must be >= 1");
  if (cfg.schedule != "none" && cfg.schedule != "xyz4")
    throw config_error("config field 'schedule': expected none|xyz4, got '" +
                       cfg.schedule + "'");
  if (cfg.bath_dim < 1) throw config_error("config field 'noise.bath_dim': must be >= 1");
  if (cfg.bath_state < 0 || cfg.bath_state >= cfg.bath_dim)
    throw config_error("config field 'noise.bath_state': must lie in [0, bath_dim)");
  parse_noise_variant(cfg.variant);  // throws unknown_label
  if (cfg.eps < 0.0) cfg.eps = 0.05 * pi / cfg.total_time;
  if (cfg.eta < 0.0) cfg.eta = 0.1 * pi / cfg.total_time;
  if (cfg.n_seeds < 1) throw config_error("config field 'n_seeds': must be >= 1");
}

void resolve_schedule_timing(run_config& cfg) {
  const double T = cfg.total_time;
  if (cfg.tau > 0.0 && cfg.cycles > 0) {
    if (std::abs(4.0 * cfg.tau * cfg.cycles - T) > 1e-9 * std::max(1.0, T))
      throw config_error("config: T = " + std::to_string(T) +
                         " is not 4*tau*cycles; whole cycles are required");
  } else if (cfg.tau > 0.0) {
    const double c = T / (4.0 * cfg.tau);
    const double rounded = std::round(c);
    if (rounded < 1.0 || std::abs(c - rounded) > 1e-9)
      throw config_error("config field 'tau': T/(4*tau) = " + std::to_string(c) +
                         " is not a whole cycle count");
    cfg.cycles = static_cast<int>(rounded);
  } else {
    if (cfg.cycles <= 0) cfg.cycles = 16;
    cfg.tau = T / (4.0 * cfg.cycles);
  }
}

}  // namespace

run_config resolve_gate_config(run_config cfg) {
  try {
    resolve_common(cfg);
  } catch (const unknown_label& e) {
    throw config_error(std::string("config field 'noise.variant': ") + e.what());
  }
  if (cfg.schedule == "xyz4") {
    resolve_schedule_timing(cfg);
  } else {
    if (cfg.cycles <= 0) cfg.cycles = 16;  // used to size no-DD stepping
    if (cfg.tau <= 0.0) cfg.tau = cfg.total_time / (4.0 * cfg.cycles);
  }
  return cfg;
}

run_config resolve_sweep_config(run_config cfg) {
  try {
    resolve_common(cfg);
  } catch (const unknown_label& e) {
    throw config_error(std::string("config field 'noise.variant': ") + e.what());
  }
  if (cfg.cycles <= 0) cfg.cycles = 16;
  if (cfg.tau_grid.empty()) {
    for (int i = 0; i < 8; ++i)
      cfg.tau_grid.push_back(std::pow(10.0, -3.0 + 2.0 * i / 7.0));
  }
  for (double tau : cfg.tau_grid)
    if (!(tau > 0.0)) throw config_error("config field 'tau_grid': entries must be > 0");
  if (cfg.fixed_total_time) {
    for (double tau : cfg.tau_grid) {
      const double c = cfg.total_time / (4.0 * tau);
      if (std::round(c) < 1.0 || std::abs(c - std::round(c)) > 1e-9)
        throw config_error("config field 'tau_grid': tau = " + std::to_string(tau) +
                           " does not divide T into whole cycles");
    }
  }
  return cfg;
}

// ---- shared pieces -------------------------------------------------------

namespace {

struct gate_setup {
  const logical_encoding* enc = nullptr;
  int n_qubits = 0;
  time_dependent_hamiltonian h;
  cmatrix target;  // analytic logical gate
};

gate_setup make_setup(const run_config& cfg, double total_time) {
  gate_setup s;
  const envelope env{parse_envelope(cfg.envelope), total_time};
  if (cfg.gate == "one_qubit") {
    s.enc = &one_qubit_encoding();
    s.n_qubits = 3;
    s.h = build_h1({cfg.theta, cfg.phi, env});
    s.target = analytic_u1(cfg.theta, cfg.phi);
  } else {
    s.enc = &two_qubit_encoding();
    s.n_qubits = 6;
    s.h = build_h2({cfg.theta, cfg.phi, env});
    s.target = analytic_u2(cfg.theta, cfg.phi);
  }
  return s;
}

joint_system make_joint(const gate_setup& s, const noise_model& nm) {
  joint_system joint;
  joint.system_dim = static_cast<int>(1L << s.n_qubits);
  joint.env_dim = nm.env_dim;
  joint.h_system = s.h;
  joint.h_env = nm.h_env;
  joint.h_int = build_interaction(nm, s.n_qubits);
  return joint;
}

// initial-bath-state Kraus block of a joint propagator
cmatrix initial_state_kraus(const cmatrix& joint_u, int system_dim, int env_dim,
                            int bath_state) {
  cmatrix k(system_dim, system_dim);
  for (int r = 0; r < system_dim; ++r)
    for (int c = 0; c < system_dim; ++c)
      k(r, c) = joint_u(r * env_dim + bath_state, c * env_dim + bath_state);
  return k;
}

}  // namespace

ensemble_metrics open_run_metrics(const cmatrix& joint_u, const logical_encoding& enc,
                                  int env_dim, const cmatrix& target_gate,
                                  std::uint64_t state_seed, int n_states,
                                  int bath_state) {
  const cmatrix basis = logical_basis(enc);
  const long sys_dim = enc.dim();
  if (joint_u.rows() != sys_dim * env_dim)
    throw dimension_mismatch("open_run_metrics: joint dim mismatch");

  std::mt19937_64 rng(state_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double fid_acc = 0.0, leak_acc = 0.0;
  for (int i = 0; i < n_states; ++i) {
    cvector amps(enc.logical_dim());
    for (int a = 0; a < enc.logical_dim(); ++a) amps(a) = complexd(gauss(rng), gauss(rng));
    amps.normalize();

    const cvector psi = basis * amps;
    cvector joint_in = cvector::Zero(sys_dim * env_dim);
    for (long sidx = 0; sidx < sys_dim; ++sidx)
      joint_in(sidx * env_dim + bath_state) = psi(sidx);

    const cvector joint_out = joint_u * joint_in;
    const cmatrix rho = partial_trace(joint_out * joint_out.adjoint(),
                                      {static_cast<int>(sys_dim), env_dim}, {0});
    const cvector target = basis * (target_gate * amps);
    fid_acc += (target.adjoint() * rho * target).value().real();
    leak_acc += 1.0 - (basis.adjoint() * rho * basis).trace().real();
  }
  return {fid_acc / n_states, leak_acc / n_states};
}

cycle_defects dd_cycle_defect(double tau, std::uint64_t seed, int n_qubits, int env_dim,
                              double eps, noise_variant variant) {
  const noise_model nm = sample_noise(seed, n_qubits, env_dim, eps, 0.0, variant);
  joint_system joint;
  joint.system_dim = static_cast<int>(1L << n_qubits);
  joint.env_dim = env_dim;
  joint.h_system = {cmatrix::Zero(joint.system_dim, joint.system_dim),
                    {envelope_kind::constant, 4.0 * tau}};
  joint.h_env = cmatrix::Zero(env_dim, env_dim);
  joint.h_int = build_interaction(nm, n_qubits);

  const cmatrix id = cmatrix::Identity(joint.joint_dim(), joint.joint_dim());
  cycle_defects d;
  d.dd = op_norm(evolve_with_dd(joint, xyz4_schedule(n_qubits, tau, 1)) - id);
  d.nodd = op_norm(evolve_without_dd(joint, 4.0 * tau, 1) - id);
  return d;
}

// ---- gate runs -----------------------------------------------------------

gate_run_result run_gate(const run_config& raw) {
  const run_config cfg = resolve_gate_config(raw);
  const gate_setup s = make_setup(cfg, cfg.total_time);
  const double T = cfg.total_time;

  gate_run_result res;
  res.config = cfg;

  // closed-system reference: realized gate and holonomy-condition residuals
  const cmatrix u_closed = propagate(s.h, 0.0, T, closed_area_steps);
  const extracted_gate ext = extract_logical_gate(u_closed, *s.enc);
  res.logical_gate = ext.gate;
  res.leakage = ext.leakage;
  res.fidelity = gate_fidelity(ext.gate, s.target);
  res.cyclic_residual = check_cyclic(u_closed, logical_basis(*s.enc));
  res.pt_residual = check_parallel_transport(s.h, *s.enc, pt_samples);
  res.gamma = realized_rotation_angle(ext.gate, cfg.theta);
  res.gamma_target = holonomy_angle(cfg.phi);

  if (cfg.eps > 0.0) {
    res.open = true;
    const noise_model nm = sample_noise(cfg.seed, s.n_qubits, cfg.bath_dim, cfg.eps,
                                        cfg.eta, parse_noise_variant(cfg.variant));
    const joint_system joint = make_joint(s, nm);
    const std::uint64_t state_seed = cfg.seed ^ state_seed_salt;
    const long nodd_steps = cfg.steps * 4L * cfg.cycles;

    const cmatrix u_nodd = evolve_without_dd(joint, T, nodd_steps);
    const ensemble_metrics m_nodd = open_run_metrics(u_nodd, *s.enc, cfg.bath_dim,
                                                     s.target, state_seed, 20,
                                                     cfg.bath_state);
    res.ensemble_fidelity_nodd = m_nodd.mean_fidelity;
    res.ensemble_leakage_nodd = m_nodd.mean_leakage;

    if (cfg.schedule == "xyz4") {
      const cmatrix u_dd = evolve_with_dd(
          joint, xyz4_schedule(s.n_qubits, cfg.tau, cfg.cycles), cfg.steps);
      const ensemble_metrics m_dd = open_run_metrics(u_dd, *s.enc, cfg.bath_dim,
                                                     s.target, state_seed, 20,
                                                     cfg.bath_state);
      res.ensemble_fidelity_dd = m_dd.mean_fidelity;
      res.ensemble_leakage_dd = m_dd.mean_leakage;
      res.fidelity = m_dd.mean_fidelity;
      res.leakage = m_dd.mean_leakage;
      res.logical_gate = extract_logical_gate(
                             initial_state_kraus(u_dd, joint.system_dim, cfg.bath_dim,
                                          cfg.bath_state),
                             *s.enc, false)
                             .gate;
    } else {
      res.fidelity = m_nodd.mean_fidelity;
      res.leakage = m_nodd.mean_leakage;
      res.logical_gate = extract_logical_gate(
                             initial_state_kraus(u_nodd, joint.system_dim, cfg.bath_dim,
                                          cfg.bath_state),
                             *s.enc, false)
                             .gate;
    }
  }
  return res;
}

// ---- serialization -------------------------------------------------------

namespace {

ordered_json config_json(const run_config& cfg) {
  ordered_json j;
  j["gate"] = cfg.gate;
  j["theta"] = cfg.theta;
  j["phi"] = cfg.phi;
  j["envelope"] = cfg.envelope;
  j["total_time"] = cfg.total_time;
  j["steps"] = cfg.steps;
  j["schedule"] = cfg.schedule;
  j["tau"] = cfg.tau;
  j["cycles"] = cfg.cycles;
  j["noise"] = {{"eps", cfg.eps},
                {"eta", cfg.eta},
                {"bath_dim", cfg.bath_dim},
                {"bath_state", cfg.bath_state},
                {"variant", cfg.variant},
                {"seed", cfg.seed}};
  j["out"] = cfg.out;
  return j;
}

ordered_json matrix_json(const cmatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string render_report(const gate_run_result& result) {
  ordered_json j;
  j["config"] = config_json(result.config);
  j["mode"] = result.open ? "open" : "closed";
  j["logical_gate"] = matrix_json(result.logical_gate);
  j["fidelity"] = result.fidelity;
  j["leakage"] = result.leakage;
  j["cyclic_residual"] = result.cyclic_residual;
  j["pt_residual"] = result.pt_residual;
  j["gamma"] = result.gamma;
  j["gamma_target"] = result.gamma_target;
  if (result.open) {
    ordered_json ens;
    if (result.ensemble_fidelity_dd >= 0.0) {
      ens["fidelity_dd"] = result.ensemble_fidelity_dd;
      ens["leakage_dd"] = result.ensemble_leakage_dd;
    }
    ens["fidelity_nodd"] = result.ensemble_fidelity_nodd;
    ens["leakage_nodd"] = result.ensemble_leakage_nodd;
    j["ensemble"] = ens;
  }
  return j.dump(2) + "\n";
}

// ---- sweeps --------------------------------------------------------------

std::vector<sweep_row> run_dd_sweep(const run_config& raw) {
  const run_config cfg = resolve_sweep_config(raw);
  std::vector<sweep_row> rows;

  for (double tau : cfg.tau_grid) {
    if (cfg.interaction_only) {
      // Per-cycle defect scaling: no gate Hamiltonian, no bath self-energy.
      // The defect norms land in the infidelity columns.
      for (int j = 0; j < cfg.n_seeds; ++j) {
        const std::uint64_t seed_j = cfg.seed ^ static_cast<std::uint64_t>(j);
        const int n = (cfg.gate == "one_qubit") ? 3 : 6;
        const cycle_defects d = dd_cycle_defect(tau, seed_j, n, cfg.bath_dim, cfg.eps,
                                                parse_noise_variant(cfg.variant));
        rows.push_back({tau, d.dd, d.nodd, 0.0, 0.0, seed_j});
      }
      continue;
    }

    int cycles_row = cfg.cycles;
    double t_row = 4.0 * tau * cycles_row;
    if (cfg.fixed_total_time) {
      t_row = cfg.total_time;
      cycles_row = static_cast<int>(std::round(t_row / (4.0 * tau)));
    }
    const gate_setup s = make_setup(cfg, t_row);
    for (int j = 0; j < cfg.n_seeds; ++j) {
      const std::uint64_t seed_j = cfg.seed ^ static_cast<std::uint64_t>(j);
      const noise_model nm = sample_noise(seed_j, s.n_qubits, cfg.bath_dim, cfg.eps,
                                          cfg.eta, parse_noise_variant(cfg.variant));
      const joint_system joint = make_joint(s, nm);
      const std::uint64_t state_seed = seed_j ^ state_seed_salt;

      const cmatrix u_dd =
          evolve_with_dd(joint, xyz4_schedule(s.n_qubits, tau, cycles_row), cfg.steps);
      const cmatrix u_nodd =
          evolve_without_dd(joint, t_row, cfg.steps * 4L * cycles_row);
      const ensemble_metrics m_dd = open_run_metrics(u_dd, *s.enc, cfg.bath_dim,
                                                      s.target, state_seed, 20,
                                                      cfg.bath_state);
      const ensemble_metrics m_nodd = open_run_metrics(u_nodd, *s.enc, cfg.bath_dim,
                                                       s.target, state_seed, 20,
                                                       cfg.bath_state);

      rows.push_back({tau, clamp01(1.0 - m_dd.mean_fidelity),
                      clamp01(1.0 - m_nodd.mean_fidelity), clamp01(m_dd.mean_leakage),
                      clamp01(m_nodd.mean_leakage), seed_j});
    }
  }
  return rows;
}

std::string render_csv(const std::vector<sweep_row>& rows) {
  std::string out = "tau,infidelity_dd,infidelity_nodd,leakage_dd,leakage_nodd,seed\n";
  char buf[256];
  for (const sweep_row& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g,%llu\n", r.tau,
                  r.infidelity_dd, r.infidelity_nodd, r.leakage_dd, r.leakage_nodd,
                  static_cast<unsigned long long>(r.seed));
    out += buf;
  }
  return out;
}

}  // namespace holodd
