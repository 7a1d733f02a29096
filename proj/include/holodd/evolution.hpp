#pragma once

// Time-ordered propagation and pulse-interleaved evolution on the joint
// system (x) environment space. Decoupling pulses are ideal: instantaneous,
// error-free unitaries applied on the system factor only.

#include <vector>

#include "holodd/hamiltonian.hpp"
#include "holodd/linalg.hpp"

namespace holodd {

struct pulse_schedule {
  std::vector<cmatrix> sequence;  // each operator unitary and self-inverse
  double tau = 0.0;               // interval duration
  int cycles = 1;

  double total_time() const { return tau * cycles * static_cast<double>(sequence.size()); }
};

// the four-interval cycle {I, (x)sigma_x, (x)sigma_y, (x)sigma_z}
pulse_schedule xyz4_schedule(int n_qubits, double tau, int cycles);

struct joint_system {
  int system_dim = 0;
  int env_dim = 1;
  time_dependent_hamiltonian h_system;  // acts on the system factor
  cmatrix h_env;                        // acts on the environment factor
  cmatrix h_int;                        // acts on the joint space

  Eigen::Index joint_dim() const { return static_cast<Eigen::Index>(system_dim) * env_dim; }
  cmatrix joint_hamiltonian(double t) const;
};

// factorized H(t) = J(t)*A self-commutes, so the propagator over [t0,t1]
// is one Hermitian exponential of the accumulated area
cmatrix propagate(const time_dependent_hamiltonian& h, double t0, double t1, long steps);

// constant Hamiltonian: exp(-i h (t1-t0))
cmatrix propagate(const cmatrix& h, double t0, double t1);

// product over intervals of (P_j (x) I_E) exp(-i int H dt) (P_j (x) I_E),
// with the system envelope integrated over each interval's own sub-window
cmatrix evolve_with_dd(const joint_system& joint, const pulse_schedule& schedule,
                       long area_steps = 200);

// piecewise-constant midpoint time ordering of the full joint Hamiltonian
cmatrix evolve_without_dd(const joint_system& joint, double total_time, long steps);

// right-to-left product: the first listed gate acts first
cmatrix apply_gate_sequence(const std::vector<cmatrix>& gates);

}  // namespace holodd
