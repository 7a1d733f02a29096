#pragma once

// Seeded random environment models: bath Hamiltonian, per-qubit bath
// operators and the joint system-bath interaction. All qubits couple to a
// single shared bath factor of dimension env_dim.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "holodd/linalg.hpp"
#include "holodd/operators.hpp"

namespace holodd {

enum class noise_variant { independent, collective, dephasing };

noise_variant parse_noise_variant(const std::string& name);
std::string to_string(noise_variant v);

struct noise_model {
  int n_qubits = 0;
  int env_dim = 1;
  double epsilon = 0.0;  // operator norm of each bath coupling operator
  double eta = 0.0;      // operator norm of the bath self-Hamiltonian
  std::uint64_t seed = 0;
  noise_variant variant = noise_variant::independent;
  std::map<std::pair<int, pauli_axis>, cmatrix> bath_ops;  // (qubit, axis) -> B
  cmatrix h_env;
};

// deterministic given the seed: Hermitian GUE-style samples (G+G^dag)/2,
// rescaled to the requested operator norms
noise_model sample_noise(std::uint64_t seed, int n_qubits, int env_dim, double epsilon,
                         double eta, noise_variant variant);

// H_I = sum_{k,alpha} sigma^alpha_k (x) B^alpha_k, system factor on the left
cmatrix build_interaction(const noise_model& model, int n_qubits);

}  // namespace holodd
