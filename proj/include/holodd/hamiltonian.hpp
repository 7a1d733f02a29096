#pragma once

// Time-dependent system Hamiltonians for the one- and two-logical-qubit
// gates, the generic XXZ builder and the logical encodings. Every
// Hamiltonian factorizes as H(t) = J(t) * constant_part with the pulse
// envelope J normalized to area pi over [0, T].

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holodd/linalg.hpp"
#include "holodd/operators.hpp"

namespace holodd {

enum class envelope_kind { constant, sine };

struct envelope {
  envelope_kind kind = envelope_kind::constant;
  double total_time = 1.0;

  // constant: pi/T; sine: (pi^2/2T) sin(pi t/T). Area over [0,T] is pi.
  double j(double t) const;

  // midpoint-rule integral of j over [t0, t1]
  double area(double t0, double t1, long steps) const;
};

struct gate_params_1q {
  double theta1 = 0.0;
  double phi1 = 0.0;
  envelope env;
};

struct gate_params_2q {
  double theta2 = 0.0;
  double phi2 = 0.0;
  envelope env;
};

// H(t) = j(t) * constant_part; constant_part must be Hermitian
struct time_dependent_hamiltonian {
  cmatrix constant_part;
  envelope env;

  Eigen::Index dim() const { return constant_part.rows(); }
  cmatrix at(double t) const { return env.j(t) * constant_part; }
};

// logical basis labels -> physical computational-basis integers
struct logical_encoding {
  std::string name;
  int n_qubits = 0;
  std::vector<std::pair<std::string, long>> logical_kets;
  std::vector<std::pair<std::string, long>> auxiliary_kets;

  long dim() const { return 1L << n_qubits; }
  int logical_dim() const { return static_cast<int>(logical_kets.size()); }
};

const logical_encoding& one_qubit_encoding();  // |0>L=|001>, |1>L=|010>, |a>=|100>
const logical_encoding& two_qubit_encoding();  // |00>L=|001001> ... |a2>=|000011>

// unit basis vector for a logical or auxiliary label
cvector encoded_state(const logical_encoding& enc, const std::string& label);

// column-stacked logical kets, and projectors onto logical / logical+aux spans
cmatrix logical_basis(const logical_encoding& enc);
cmatrix logical_projector(const logical_encoding& enc);
cmatrix encoded_projector(const logical_encoding& enc);

// sum of xxz_term over the coupling map, keys are (k,l) pairs with k < l
cmatrix build_xxz(const std::map<std::pair<int, int>, std::pair<double, double>>& couplings,
                  int n);

// the one- and two-logical-qubit gate Hamiltonians; 8-dim and 64-dim
time_dependent_hamiltonian build_h1(const gate_params_1q& params);
time_dependent_hamiltonian build_h2(const gate_params_2q& params);

}  // namespace holodd
