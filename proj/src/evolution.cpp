#include "holodd/evolution.hpp"

#include <cmath>
#include <string>

namespace holodd {

namespace {
constexpr double schedule_unitarity_tol = 1e-12;
constexpr double schedule_time_tol = 1e-9;
}  // namespace

pulse_schedule xyz4_schedule(int n_qubits, double tau, int cycles) {
  pulse_schedule s;
  s.sequence = {cmatrix::Identity(1L << n_qubits, 1L << n_qubits),
                collective_pauli(pauli_axis::X, n_qubits),
                collective_pauli(pauli_axis::Y, n_qubits),
                collective_pauli(pauli_axis::Z, n_qubits)};
  s.tau = tau;
  s.cycles = cycles;
  return s;
}

cmatrix joint_system::joint_hamiltonian(double t) const {
  const cmatrix id_s = cmatrix::Identity(system_dim, system_dim);
  const cmatrix id_e = cmatrix::Identity(env_dim, env_dim);
  return kron(h_system.at(t), id_e) + kron(id_s, h_env) + h_int;
}

cmatrix propagate(const time_dependent_hamiltonian& h, double t0, double t1, long steps) {
  if (!(t1 > t0)) throw invalid_interval("propagate: need t1 > t0");
  if (steps < 1) throw invalid_interval("propagate: steps must be >= 1");
  return matexp_hermitian(h.constant_part, h.env.area(t0, t1, steps));
}

cmatrix propagate(const cmatrix& h, double t0, double t1) {
  if (!(t1 > t0)) throw invalid_interval("propagate: need t1 > t0");
  return matexp_hermitian(h, t1 - t0);
}

namespace {

void validate_joint(const joint_system& joint) {
  if (joint.system_dim < 1 || joint.env_dim < 1)
    throw dimension_mismatch("joint_system: dims must be positive");
  if (joint.h_system.constant_part.rows() != joint.system_dim ||
      joint.h_system.constant_part.cols() != joint.system_dim)
    throw dimension_mismatch("joint_system: system Hamiltonian dim mismatch");
  if (joint.h_env.rows() != joint.env_dim || joint.h_env.cols() != joint.env_dim)
    throw dimension_mismatch("joint_system: environment Hamiltonian dim mismatch");
  if (joint.h_int.rows() != joint.joint_dim() || joint.h_int.cols() != joint.joint_dim())
    throw dimension_mismatch("joint_system: interaction Hamiltonian dim mismatch");
}

void validate_schedule(const joint_system& joint, const pulse_schedule& schedule) {
  if (schedule.sequence.empty() || schedule.tau <= 0.0 || schedule.cycles < 1)
    throw schedule_mismatch("evolve_with_dd: empty or non-positive schedule");
  for (const cmatrix& p : schedule.sequence) {
    if (p.rows() != joint.system_dim || p.cols() != joint.system_dim)
      throw schedule_mismatch("evolve_with_dd: pulse dim " + std::to_string(p.rows()) +
                              " vs system dim " + std::to_string(joint.system_dim));
    if (!is_unitary(p, schedule_unitarity_tol))
      throw schedule_mismatch("evolve_with_dd: pulse operator not unitary");
    if (((p * p) - cmatrix::Identity(p.rows(), p.cols())).cwiseAbs().maxCoeff() >
        schedule_unitarity_tol)
      throw schedule_mismatch("evolve_with_dd: pulse operator not self-inverse");
  }
  const double mismatch = std::abs(schedule.total_time() - joint.h_system.env.total_time);
  if (mismatch > schedule_time_tol)
    throw schedule_mismatch("evolve_with_dd: schedule covers " +
                            std::to_string(schedule.total_time()) + " but the gate runs for " +
                            std::to_string(joint.h_system.env.total_time));
}

}  // namespace

cmatrix evolve_with_dd(const joint_system& joint, const pulse_schedule& schedule,
                       long area_steps) {
  validate_joint(joint);
  validate_schedule(joint, schedule);
  const cmatrix id_s = cmatrix::Identity(joint.system_dim, joint.system_dim);
  const cmatrix id_e = cmatrix::Identity(joint.env_dim, joint.env_dim);
  const cmatrix drift = kron(id_s, joint.h_env) + joint.h_int;  // time-independent part
  const cmatrix sys = kron(joint.h_system.constant_part, id_e);

  std::vector<cmatrix> joint_pulses;
  joint_pulses.reserve(schedule.sequence.size());
  for (const cmatrix& p : schedule.sequence) joint_pulses.push_back(kron(p, id_e));

  cmatrix u = cmatrix::Identity(joint.joint_dim(), joint.joint_dim());
  double t = 0.0;
  for (int c = 0; c < schedule.cycles; ++c) {
    for (const cmatrix& pj : joint_pulses) {
      const double area = joint.h_system.env.area(t, t + schedule.tau, area_steps);
      u = pj * matexp_hermitian(area * sys + schedule.tau * drift, 1.0) * pj * u;
      t += schedule.tau;
    }
  }
  return u;
}

cmatrix evolve_without_dd(const joint_system& joint, double total_time, long steps) {
  validate_joint(joint);
  if (steps < 1) throw invalid_interval("evolve_without_dd: steps must be >= 1");
  const cmatrix id_e = cmatrix::Identity(joint.env_dim, joint.env_dim);
  const cmatrix drift = kron(cmatrix::Identity(joint.system_dim, joint.system_dim),
                             joint.h_env) + joint.h_int;
  const cmatrix sys = kron(joint.h_system.constant_part, id_e);

  // a constant envelope makes the joint Hamiltonian time-independent, so a
  // single exponential is the exact time-ordered result
  if (joint.h_system.env.kind == envelope_kind::constant) {
    const cmatrix gen = joint.h_system.env.j(0.0) * sys + drift;
    return matexp_hermitian(gen, total_time);
  }

  const double dt = total_time / static_cast<double>(steps);
  cmatrix u = cmatrix::Identity(joint.joint_dim(), joint.joint_dim());
  for (long i = 0; i < steps; ++i) {
    const double t_mid = (static_cast<double>(i) + 0.5) * dt;
    u = matexp_hermitian(joint.h_system.env.j(t_mid) * sys + drift, dt) * u;
  }
  return u;
}

cmatrix apply_gate_sequence(const std::vector<cmatrix>& gates) {
  if (gates.empty()) throw dimension_mismatch("apply_gate_sequence: empty sequence");
  cmatrix u = gates.front();
  for (size_t i = 1; i < gates.size(); ++i) {
    if (gates[i].rows() != u.rows() || gates[i].cols() != u.cols())
      throw dimension_mismatch("apply_gate_sequence: gate dims differ");
    u = gates[i] * u;
  }
  return u;
}

}  // namespace holodd
