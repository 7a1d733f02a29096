#include "holodd/noise.hpp"

#include <random>

namespace holodd {

noise_variant parse_noise_variant(const std::string& name) {
  if (name == "independent") return noise_variant::independent;
  if (name == "collective") return noise_variant::collective;
  if (name == "dephasing") return noise_variant::dephasing;
  throw unknown_label("noise variant '" + name + "'");
}

std::string to_string(noise_variant v) {
  switch (v) {
    case noise_variant::independent: return "independent";
    case noise_variant::collective: return "collective";
    default: return "dephasing";
  }
}

namespace {

// (G+G^dag)/2 from i.i.d. standard complex normals, rescaled to op norm `norm`
cmatrix sample_hermitian(std::mt19937_64& rng, int dim, double norm) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  cmatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = complexd(gauss(rng), gauss(rng));
  cmatrix h = 0.5 * (g + g.adjoint().eval());
  if (norm == 0.0) return cmatrix::Zero(dim, dim);
  const double have = op_norm(h);
  if (have == 0.0) return norm * cmatrix::Identity(dim, dim);  // measure-zero fallback
  return (norm / have) * h;
}

}  // namespace

noise_model sample_noise(std::uint64_t seed, int n_qubits, int env_dim, double epsilon,
                         double eta, noise_variant variant) {
  if (env_dim < 1) throw dimension_mismatch("sample_noise: env_dim must be >= 1");
  noise_model model;
  model.n_qubits = n_qubits;
  model.env_dim = env_dim;
  model.epsilon = epsilon;
  model.eta = eta;
  model.seed = seed;
  model.variant = variant;

  std::mt19937_64 rng(seed);
  model.h_env = sample_hermitian(rng, env_dim, eta);

  const pauli_axis axes[] = {pauli_axis::X, pauli_axis::Y, pauli_axis::Z};
  for (pauli_axis axis : axes) {
    if (variant == noise_variant::dephasing && axis != pauli_axis::Z) continue;
    if (variant == noise_variant::collective) {
      const cmatrix shared = sample_hermitian(rng, env_dim, epsilon);
      for (int k = 1; k <= n_qubits; ++k) model.bath_ops[{k, axis}] = shared;
    } else {
      for (int k = 1; k <= n_qubits; ++k)
        model.bath_ops[{k, axis}] = sample_hermitian(rng, env_dim, epsilon);
    }
  }
  return model;
}

cmatrix build_interaction(const noise_model& model, int n_qubits) {
  if (model.n_qubits != n_qubits)
    throw dimension_mismatch("build_interaction: model sampled for " +
                             std::to_string(model.n_qubits) + " qubits, asked for " +
                             std::to_string(n_qubits));
  const long sys_dim = 1L << n_qubits;
  cmatrix h = cmatrix::Zero(sys_dim * model.env_dim, sys_dim * model.env_dim);
  for (const auto& [key, bath_op] : model.bath_ops) {
    if (bath_op.rows() != model.env_dim)
      throw dimension_mismatch("build_interaction: bath operator dim mismatch");
    h += kron(pauli_on(key.second, key.first, n_qubits), bath_op);
  }
  return h;
}

}  // namespace holodd
