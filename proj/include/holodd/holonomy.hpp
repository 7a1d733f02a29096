#pragma once

// Holonomy-condition checks along simulated trajectories, logical-gate
// extraction and the closed-form target gates, plus fidelity, leakage and
// entangling-power diagnostics.

#include "holodd/hamiltonian.hpp"
#include "holodd/linalg.hpp"

namespace holodd {

struct gate_report {
  cmatrix logical_gate;        // global-phase normalized, 2x2 or 4x4
  double leakage = 0.0;
  double fidelity = 0.0;
  double cyclic_residual = 0.0;
  double pt_residual = 0.0;
  double gamma = 0.0;          // realized rotation angle
};

// fix the overall phase: the largest-modulus element (row-major scan,
// first strict maximum) is made real positive
cmatrix phase_normalize(const cmatrix& g);

// condition (i): ||sum_k u|k><k|u^dag - sum_k |k><k||| over the logical kets
double check_cyclic(const cmatrix& u_final, const cmatrix& logical_basis);

// condition (ii): max_t max_{k,l} |<phi_k(t)|H(t)|phi_l(t)>| with the
// identity-in-subspace term restored (the dropped global-phase gauge),
// sampled at n_samples times across [0, T]
double check_parallel_transport(const time_dependent_hamiltonian& h,
                                const logical_encoding& enc, int n_samples,
                                long area_steps = 2000);

// logical block <iL|u|jL>, phase normalized; leakage is the worst-case
// population loss out of the logical span over logical inputs
struct extracted_gate {
  cmatrix gate;
  double leakage = 0.0;
};
extracted_gate extract_logical_gate(const cmatrix& u, const logical_encoding& enc,
                                    bool require_unitary = true);

// |d><d| + e^{i gamma}|b><b| on the logical basis, gamma = -(pi + pi sin phi)
cmatrix analytic_u1(double theta1, double phi1);

// the same gate written as e^{i gamma/2} exp(-i gamma (sin t X + cos t Z)/2)
cmatrix analytic_u1_rotation(double theta1, double phi1);

// two-qubit projector form over {|00>,|01>,|10>,|11>}
cmatrix analytic_u2(double theta2, double phi2);

// controlled form |0><0| (x) exp(-i g(sX+cZ)/2) + |1><1| (x) exp(-i g(sX-cZ)/2)
cmatrix analytic_u2_controlled(double theta2, double phi2);

double holonomy_angle(double phi);  // gamma = -(pi + pi sin phi)

// |Tr(target^dag actual)| / d, invariant under global phases
double gate_fidelity(const cmatrix& actual, const cmatrix& target);

// rotation angle realized by a (block-)diagonal-in-{d,b} gate; for 4x4
// gates the first-qubit-|0> block is used
double realized_rotation_angle(const cmatrix& gate, double theta);

// operator-Schmidt rank across the 2 (x) 2 split; rank 1 <=> product gate
int entangling_check(const cmatrix& gate4, double sv_tol = 1e-10);

}  // namespace holodd
