#include "holodd/verify.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

#include "holodd/evolution.hpp"
#include "holodd/holonomy.hpp"
#include "holodd/noise.hpp"

namespace holodd {

namespace {

constexpr double pi = 3.14159265358979323846;

cmatrix random_hermitian(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  cmatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = complexd(gauss(rng), gauss(rng));
  return 0.5 * (g + g.adjoint().eval());
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

double h1_projection_residual(const cmatrix& h1_constant, double theta1, double phi1) {
  const auto& enc = one_qubit_encoding();
  // basis order (|0>L, |1>L, |a>)
  std::vector<long> idx{enc.logical_kets[0].second, enc.logical_kets[1].second,
                        enc.auxiliary_kets[0].second};
  cmatrix projected(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) projected(r, c) = h1_constant(idx[r], idx[c]);

  const double cphi = std::cos(phi1), sphi = std::sin(phi1);
  const double sh = std::sin(theta1 / 2.0), ch = std::cos(theta1 / 2.0);
  cmatrix expected(3, 3);
  expected << -sphi, 0, cphi * sh,
               0, -sphi, -cphi * ch,
               cphi * sh, -cphi * ch, sphi;
  return (projected - expected).cwiseAbs().maxCoeff();
}

double h2_projection_residual(const cmatrix& h2_constant, double theta2, double phi2) {
  const auto& enc = two_qubit_encoding();
  // basis order (|00>L, |01>L, |10>L, |11>L, |a1>, |a2>)
  std::vector<long> idx;
  for (const auto& [name, i] : enc.logical_kets) idx.push_back(i);
  for (const auto& [name, i] : enc.auxiliary_kets) idx.push_back(i);
  cmatrix projected(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) projected(r, c) = h2_constant(idx[r], idx[c]);

  const double cphi = std::cos(phi2), sphi = std::sin(phi2);
  const double sh = std::sin(theta2 / 2.0), ch = std::cos(theta2 / 2.0);
  cmatrix expected = cmatrix::Zero(6, 6);
  expected(0, 0) = expected(1, 1) = expected(2, 2) = expected(3, 3) = -sphi;
  expected(4, 4) = expected(5, 5) = sphi;
  expected(4, 0) = expected(0, 4) = cphi * sh;    // a1 <-> 00
  expected(4, 1) = expected(1, 4) = -cphi * ch;   // a1 <-> 01
  expected(5, 2) = expected(2, 5) = -cphi * ch;   // a2 <-> 10
  expected(5, 3) = expected(3, 5) = cphi * sh;    // a2 <-> 11
  return (projected - expected).cwiseAbs().maxCoeff();
}

double decoupling_compatibility_residual(const cmatrix& h_constant, int n_qubits) {
  double worst = 0.0;
  for (pauli_axis axis : {pauli_axis::X, pauli_axis::Y, pauli_axis::Z}) {
    const cmatrix p = collective_pauli(axis, n_qubits);
    worst = std::max(worst, op_norm(h_constant * p - p * h_constant));
  }
  return worst;
}

double invariant_subspace_residual(const cmatrix& h_constant, const logical_encoding& enc) {
  const cmatrix proj = encoded_projector(enc);
  const cmatrix id = cmatrix::Identity(enc.dim(), enc.dim());
  return op_norm((id - proj) * h_constant * proj);
}

double db_basis_residual(const cmatrix& h1_constant, double theta1, double phi1) {
  const auto& enc = one_qubit_encoding();
  const double sh = std::sin(theta1 / 2.0), ch = std::cos(theta1 / 2.0);
  const cvector ket0 = encoded_state(enc, "0");
  const cvector ket1 = encoded_state(enc, "1");
  const cvector keta = encoded_state(enc, "a");
  cmatrix basis(enc.dim(), 3);  // columns (|d>, |b>, |a>)
  basis.col(0) = ch * ket0 + sh * ket1;
  basis.col(1) = sh * ket0 - ch * ket1;
  basis.col(2) = keta;

  const double sphi = std::sin(phi1), cphi = std::cos(phi1);
  const cmatrix shifted = h1_constant + sphi * encoded_projector(enc);
  const cmatrix block = basis.adjoint() * shifted * basis;
  cmatrix expected(3, 3);
  expected << 0, 0, 0,
              0, 0, cphi,
              0, cphi, 2.0 * sphi;
  return (block - expected).cwiseAbs().maxCoeff();
}

double interaction_cancellation_residual(const cmatrix& h_int, int n_qubits, int env_dim) {
  const cmatrix id_e = cmatrix::Identity(env_dim, env_dim);
  cmatrix acc = h_int;
  for (pauli_axis axis : {pauli_axis::X, pauli_axis::Y, pauli_axis::Z}) {
    const cmatrix p = kron(collective_pauli(axis, n_qubits), id_e);
    acc += p * h_int * p;
  }
  return acc.cwiseAbs().maxCoeff();
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

namespace {

check_result make(const std::string& name, double residual, double tol) {
  return {name, residual, tol, residual <= tol};
}

check_result check_exp_semigroup() {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int rep = 0; rep < 8; ++rep) {
    const cmatrix h = random_hermitian(rng, 8);
    const double t = uniform(rng, -2.0, 2.0), s = uniform(rng, -2.0, 2.0);
    worst = std::max(worst, op_norm(matexp_hermitian(h, t) * matexp_hermitian(h, s) -
                                    matexp_hermitian(h, t + s)));
  }
  return make("linalg/exp-semigroup", worst, 1e-10);
}

check_result check_matexp_unitarity() {
  std::mt19937_64 rng(102);
  double worst = 0.0;
  for (int dim : {2, 16, 64, 256}) {
    const cmatrix u = matexp_hermitian(random_hermitian(rng, dim), uniform(rng, 0.1, 3.0));
    worst = std::max(worst,
                     (u.adjoint() * u - cmatrix::Identity(dim, dim)).cwiseAbs().maxCoeff());
  }
  return make("linalg/matexp-unitarity", worst, 1e-10);
}

check_result check_partial_trace() {
  std::mt19937_64 rng(103);
  std::normal_distribution<double> gauss(0.0, 1.0);
  cvector psi(32);
  for (int i = 0; i < 32; ++i) psi(i) = complexd(gauss(rng), gauss(rng));
  psi.normalize();
  const cmatrix rho = psi * psi.adjoint();
  const cmatrix reduced = partial_trace(rho, {8, 4}, {0});
  double worst = std::abs(reduced.trace().real() - 1.0);
  worst = std::max(worst, std::abs(reduced.trace().imag()));
  worst = std::max(worst, (reduced - reduced.adjoint()).cwiseAbs().maxCoeff());
  // linearity on a random mixture
  const cmatrix rho2 = random_hermitian(rng, 32);
  const cmatrix lhs = partial_trace(0.3 * rho + 0.7 * rho2, {8, 4}, {0});
  const cmatrix rhs = 0.3 * partial_trace(rho, {8, 4}, {0}) +
                      0.7 * partial_trace(rho2, {8, 4}, {0});
  worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  return make("linalg/partial-trace", worst, 1e-12);
}

check_result check_kron_associativity() {
  std::mt19937_64 rng(104);
  const cmatrix a = random_hermitian(rng, 2), b = random_hermitian(rng, 3),
                c = random_hermitian(rng, 4);
  const double res = (kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff();
  return make("linalg/kron-associativity", res, 1e-14);
}

check_result check_xxz_compatibility() {
  std::mt19937_64 rng(105);
  double worst = 0.0;
  for (int n : {3, 6}) {
    for (int k = 1; k < n; ++k)
      for (int l = k + 1; l <= n; ++l) {
        const cmatrix term = xxz_term(k, l, uniform(rng, -2, 2), uniform(rng, -2, 2), n);
        worst = std::max(worst, decoupling_compatibility_residual(term, n));
      }
  }
  return make("operators/xxz-decoupling-commute", worst, 1e-13);
}

check_result check_collective_self_inverse() {
  double worst = 0.0;
  for (int n : {1, 3, 6}) {
    for (pauli_axis axis : {pauli_axis::I, pauli_axis::X, pauli_axis::Y, pauli_axis::Z}) {
      const cmatrix p = collective_pauli(axis, n);
      worst = std::max(worst,
                       (p * p - cmatrix::Identity(p.rows(), p.cols())).cwiseAbs().maxCoeff());
    }
  }
  return make("operators/collective-self-inverse", worst, 1e-14);
}

check_result check_h_compatibility() {
  std::mt19937_64 rng(106);
  double worst = 0.0;
  for (int rep = 0; rep < 4; ++rep) {
    const auto h1 = build_h1({uniform(rng, -pi, pi), uniform(rng, -pi, pi), {}});
    worst = std::max(worst, decoupling_compatibility_residual(h1.constant_part, 3));
    const auto h2 = build_h2({uniform(rng, -pi, pi), uniform(rng, -pi, pi), {}});
    worst = std::max(worst, decoupling_compatibility_residual(h2.constant_part, 6));
  }
  return make("hamiltonian/decoupling-commute", worst, 1e-13);
}

check_result check_invariant_subspace() {
  std::mt19937_64 rng(107);
  double worst = 0.0;
  for (int rep = 0; rep < 4; ++rep) {
    const auto h1 = build_h1({uniform(rng, -pi, pi), uniform(rng, -pi, pi), {}});
    worst = std::max(worst, invariant_subspace_residual(h1.constant_part, one_qubit_encoding()));
    const auto h2 = build_h2({uniform(rng, -pi, pi), uniform(rng, -pi, pi), {}});
    worst = std::max(worst, invariant_subspace_residual(h2.constant_part, two_qubit_encoding()));
  }
  return make("hamiltonian/invariant-subspace", worst, 1e-13);
}

check_result check_h1_projection() {
  std::mt19937_64 rng(108);
  double worst = 0.0;
  for (int rep = 0; rep < 6; ++rep) {
    const double th = uniform(rng, -pi, pi), ph = uniform(rng, -pi, pi);
    worst = std::max(worst, h1_projection_residual(build_h1({th, ph, {}}).constant_part, th, ph));
  }
  return make("hamiltonian/h1-projection", worst, 1e-13);
}

check_result check_h2_projection() {
  std::mt19937_64 rng(109);
  double worst = 0.0;
  for (int rep = 0; rep < 6; ++rep) {
    const double th = uniform(rng, -pi, pi), ph = uniform(rng, -pi, pi);
    worst = std::max(worst, h2_projection_residual(build_h2({th, ph, {}}).constant_part, th, ph));
  }
  return make("hamiltonian/h2-projection", worst, 1e-13);
}

check_result check_db_basis() {
  std::mt19937_64 rng(110);
  double worst = 0.0;
  for (int rep = 0; rep < 6; ++rep) {
    const double th = uniform(rng, -pi, pi), ph = uniform(rng, -pi, pi);
    worst = std::max(worst, db_basis_residual(build_h1({th, ph, {}}).constant_part, th, ph));
  }
  return make("hamiltonian/db-basis-form", worst, 1e-13);
}

check_result check_envelope_area() {
  double worst = 0.0;
  for (envelope_kind kind : {envelope_kind::constant, envelope_kind::sine}) {
    for (double T : {0.5, 1.0, 3.0}) {
      const envelope env{kind, T};
      worst = std::max(worst, std::abs(env.area(0.0, T, 200000) - pi));
    }
  }
  return make("hamiltonian/envelope-area", worst, 1e-10);
}

check_result check_pulse_sandwich() {
  std::mt19937_64 rng(111);
  double worst = 0.0;
  for (pauli_axis axis : {pauli_axis::X, pauli_axis::Y, pauli_axis::Z}) {
    const cmatrix p = collective_pauli(axis, 3);
    const cmatrix a = random_hermitian(rng, 8);
    worst = std::max(worst, op_norm(p * matexp_hermitian(a, 1.0) * p -
                                    matexp_hermitian(p * a * p, 1.0)));
  }
  return make("evolution/pulse-sandwich", worst, 1e-12);
}

joint_system make_joint(std::uint64_t seed, double theta, double phi, double T,
                        double eps, double eta) {
  const noise_model nm = sample_noise(seed, 3, 4, eps, eta, noise_variant::independent);
  joint_system joint;
  joint.system_dim = 8;
  joint.env_dim = 4;
  joint.h_system = build_h1({theta, phi, {envelope_kind::constant, T}});
  joint.h_env = nm.h_env;
  joint.h_int = build_interaction(nm, 3);
  return joint;
}

check_result check_identity_schedule() {
  const joint_system joint = make_joint(200, 0.7, 0.3, 1.0, 0.1, 0.2);
  pulse_schedule sched;
  sched.sequence.assign(4, cmatrix::Identity(8, 8));
  sched.tau = 1.0 / 64.0;
  sched.cycles = 16;
  const cmatrix with_dd = evolve_with_dd(joint, sched);
  const cmatrix without = evolve_without_dd(joint, 1.0, 1);
  return make("evolution/identity-schedule-consistency",
              op_norm(with_dd - without), 1e-10);
}

check_result check_interaction_cancellation() {
  double worst = 0.0;
  for (noise_variant v : {noise_variant::independent, noise_variant::collective,
                          noise_variant::dephasing}) {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      const noise_model nm = sample_noise(seed, 3, 4, 0.3, 0.1, v);
      worst = std::max(worst,
                       interaction_cancellation_residual(build_interaction(nm, 3), 3, 4));
    }
  }
  return make("noise/interaction-cancellation", worst, 1e-12);
}

check_result check_noise_determinism() {
  const noise_model a = sample_noise(77, 3, 4, 0.3, 0.1, noise_variant::independent);
  const noise_model b = sample_noise(77, 3, 4, 0.3, 0.1, noise_variant::independent);
  double worst = (a.h_env - b.h_env).cwiseAbs().maxCoeff();
  for (const auto& [key, op] : a.bath_ops)
    worst = std::max(worst, (op - b.bath_ops.at(key)).cwiseAbs().maxCoeff());
  return make("noise/determinism", worst, 0.0);
}

check_result check_noise_norm_contract() {
  double worst = 0.0;
  for (std::uint64_t seed : {11ull, 12ull}) {
    const noise_model nm = sample_noise(seed, 3, 4, 0.25, 0.1, noise_variant::independent);
    const double bound = 3.0 * 3 * 0.25;
    worst = std::max(worst, op_norm(build_interaction(nm, 3)) - bound);
  }
  return make("noise/norm-contract", std::max(0.0, worst), 1e-12);
}

check_result check_dd_scaling() {
  const noise_model nm = sample_noise(300, 3, 4, 0.05 * pi, 0.0, noise_variant::independent);
  const cmatrix h_int = build_interaction(nm, 3);
  const cmatrix id = cmatrix::Identity(32, 32);
  std::vector<double> taus{1e-3, 1e-2, 1e-1}, defects;
  for (double tau : taus) {
    joint_system joint;
    joint.system_dim = 8;
    joint.env_dim = 4;
    joint.h_system = {cmatrix::Zero(8, 8), {envelope_kind::constant, 4.0 * tau}};
    joint.h_env = cmatrix::Zero(4, 4);
    joint.h_int = h_int;
    defects.push_back(op_norm(evolve_with_dd(joint, xyz4_schedule(3, tau, 1)) - id));
  }
  const double slope = loglog_slope(taus, defects);
  return make("evolution/dd-cycle-scaling", std::abs(slope - 2.0), 0.1);
}

struct roundtrip {
  double infidelity = 0.0;
  double cyclic = 0.0;
  double pt = 0.0;
};

roundtrip holonomy_roundtrip_1q(double theta, double phi) {
  const auto& enc = one_qubit_encoding();
  const auto h = build_h1({theta, phi, {}});
  const cmatrix u = propagate(h, 0.0, 1.0, 1000);
  const auto ext = extract_logical_gate(u, enc);
  roundtrip r;
  r.infidelity = 1.0 - gate_fidelity(ext.gate, analytic_u1(theta, phi));
  r.cyclic = check_cyclic(u, logical_basis(enc));
  r.pt = check_parallel_transport(h, enc, 100);
  return r;
}

roundtrip holonomy_roundtrip_2q(double theta, double phi) {
  const auto& enc = two_qubit_encoding();
  const auto h = build_h2({theta, phi, {}});
  const cmatrix u = propagate(h, 0.0, 1.0, 1000);
  const auto ext = extract_logical_gate(u, enc);
  roundtrip r;
  r.infidelity = 1.0 - gate_fidelity(ext.gate, analytic_u2(theta, phi));
  r.cyclic = check_cyclic(u, logical_basis(enc));
  r.pt = check_parallel_transport(h, enc, 100);
  return r;
}

void append_roundtrip_checks(std::vector<check_result>& out) {
  std::mt19937_64 rng(112);
  roundtrip worst1, worst2;
  for (int rep = 0; rep < 5; ++rep) {
    const roundtrip r = holonomy_roundtrip_1q(uniform(rng, -pi, pi), uniform(rng, -pi, pi));
    worst1.infidelity = std::max(worst1.infidelity, r.infidelity);
    worst1.cyclic = std::max(worst1.cyclic, r.cyclic);
    worst1.pt = std::max(worst1.pt, r.pt);
  }
  for (int rep = 0; rep < 3; ++rep) {
    const roundtrip r = holonomy_roundtrip_2q(uniform(rng, -pi, pi), uniform(rng, -pi, pi));
    worst2.infidelity = std::max(worst2.infidelity, r.infidelity);
    worst2.cyclic = std::max(worst2.cyclic, r.cyclic);
    worst2.pt = std::max(worst2.pt, r.pt);
  }
  out.push_back(make("holonomy/1q-gate-infidelity", worst1.infidelity, 1e-8));
  out.push_back(make("holonomy/1q-cyclic", worst1.cyclic, 1e-8));
  out.push_back(make("holonomy/1q-parallel-transport", worst1.pt, 1e-9));
  out.push_back(make("holonomy/2q-gate-infidelity", worst2.infidelity, 1e-8));
  out.push_back(make("holonomy/2q-cyclic", worst2.cyclic, 1e-8));
  out.push_back(make("holonomy/2q-parallel-transport", worst2.pt, 1e-9));
}

check_result check_envelope_independence() {
  const auto& enc = one_qubit_encoding();
  double worst = 0.0;
  for (auto [theta, phi] : {std::pair{0.7, 0.3}, std::pair{2.1, -1.0}}) {
    const auto hc = build_h1({theta, phi, {envelope_kind::constant, 1.0}});
    const auto hs = build_h1({theta, phi, {envelope_kind::sine, 1.0}});
    const cmatrix gc = extract_logical_gate(propagate(hc, 0, 1, 500000), enc).gate;
    const cmatrix gs = extract_logical_gate(propagate(hs, 0, 1, 500000), enc).gate;
    worst = std::max(worst, (gc - gs).cwiseAbs().maxCoeff());
  }
  return make("holonomy/envelope-independence", worst, 1e-8);
}

check_result check_u1_forms() {
  std::mt19937_64 rng(113);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const double th = uniform(rng, -pi, pi), ph = uniform(rng, -pi, pi);
    worst = std::max(worst, (phase_normalize(analytic_u1(th, ph)) -
                             phase_normalize(analytic_u1_rotation(th, ph)))
                                .cwiseAbs()
                                .maxCoeff());
  }
  return make("holonomy/u1-forms-agree", worst, 1e-12);
}

check_result check_u2_forms() {
  std::mt19937_64 rng(114);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const double th = uniform(rng, -pi, pi), ph = uniform(rng, -pi, pi);
    worst = std::max(worst, (phase_normalize(analytic_u2(th, ph)) -
                             phase_normalize(analytic_u2_controlled(th, ph)))
                                .cwiseAbs()
                                .maxCoeff());
  }
  return make("holonomy/u2-forms-agree", worst, 1e-12);
}

check_result check_controlled_phase() {
  double worst = 0.0;
  for (double phi : {0.0, 0.4, -1.1}) {
    const double gamma = holonomy_angle(phi);
    cmatrix rz(2, 2);
    rz << std::exp(complexd(0, gamma / 2.0)), 0, 0, std::exp(complexd(0, -gamma / 2.0));
    const cmatrix composed = apply_gate_sequence({analytic_u2(0.0, phi),
                                                  kron(cmatrix::Identity(2, 2), rz)});
    cmatrix target = cmatrix::Identity(4, 4);
    target(2, 2) = std::exp(complexd(0, gamma));
    target(3, 3) = std::exp(complexd(0, -gamma));
    worst = std::max(worst,
                     (phase_normalize(composed) - phase_normalize(target)).cwiseAbs().maxCoeff());
  }
  return make("holonomy/controlled-phase-composition", worst, 1e-10);
}

check_result check_mid_evolution_leakage() {
  const auto& enc = one_qubit_encoding();
  const auto h = build_h1({pi / 2.0, 0.0, {}});
  const cvector start = encoded_state(enc, "0");
  const cmatrix proj = logical_projector(enc);
  double min_pop = 1.0;
  cmatrix u = cmatrix::Identity(8, 8);
  const int samples = 50;
  for (int i = 1; i <= samples; ++i) {
    u = propagate(h, (i - 1.0) / samples, static_cast<double>(i) / samples, 100) * u;
    const cvector psi = u * start;
    min_pop = std::min(min_pop, (psi.adjoint() * proj * psi).value().real());
  }
  return make("holonomy/mid-evolution-leakage", std::max(0.0, min_pop - 0.99), 0.0);
}

check_result check_dark_state_eigenvector() {
  std::mt19937_64 rng(115);
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const double th = uniform(rng, -pi, pi), ph = uniform(rng, -pi, pi);
    const cmatrix u = analytic_u1(th, ph);
    cvector d(2);
    d << std::cos(th / 2.0), std::sin(th / 2.0);
    worst = std::max(worst, (u * d - d).norm());
  }
  return make("holonomy/dark-state-fixed", worst, 1e-12);
}

}  // namespace

std::vector<check_result> run_all_checks() {
  std::vector<check_result> out;
  out.push_back(check_exp_semigroup());
  out.push_back(check_matexp_unitarity());
  out.push_back(check_partial_trace());
  out.push_back(check_kron_associativity());
  out.push_back(check_xxz_compatibility());
  out.push_back(check_collective_self_inverse());
  out.push_back(check_h_compatibility());
  out.push_back(check_invariant_subspace());
  out.push_back(check_h1_projection());
  out.push_back(check_h2_projection());
  out.push_back(check_db_basis());
  out.push_back(check_envelope_area());
  out.push_back(check_pulse_sandwich());
  out.push_back(check_identity_schedule());
  out.push_back(check_interaction_cancellation());
  out.push_back(check_noise_determinism());
  out.push_back(check_noise_norm_contract());
  out.push_back(check_dd_scaling());
  append_roundtrip_checks(out);
  out.push_back(check_envelope_independence());
  out.push_back(check_u1_forms());
  out.push_back(check_u2_forms());
  out.push_back(check_controlled_phase());
  out.push_back(check_mid_evolution_leakage());
  out.push_back(check_dark_state_eigenvector());
  return out;
}

int report_checks(const std::vector<check_result>& results, std::ostream& out) {
  int failures = 0;
  for (const check_result& r : results) {
    out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << r.name
        << std::scientific << std::setprecision(3) << " residual=" << r.residual
        << "  tol=" << r.tol << "\n";
    if (!r.pass) ++failures;
  }
  return failures;
}

}  // namespace holodd
