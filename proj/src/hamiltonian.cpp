#include "holodd/hamiltonian.hpp"

#include <cmath>

namespace holodd {

namespace {
constexpr double pi = 3.14159265358979323846;
}

double envelope::j(double t) const {
  const double T = total_time;
  if (kind == envelope_kind::constant) return pi / T;
  return (pi * pi / (2.0 * T)) * std::sin(pi * t / T);
}

double envelope::area(double t0, double t1, long steps) const {
  if (steps < 1) throw invalid_interval("envelope::area: steps must be >= 1");
  if (kind == envelope_kind::constant) return (pi / total_time) * (t1 - t0);
  const double h = (t1 - t0) / static_cast<double>(steps);
  double acc = 0.0;
  for (long i = 0; i < steps; ++i) acc += j(t0 + (static_cast<double>(i) + 0.5) * h);
  return acc * h;
}

const logical_encoding& one_qubit_encoding() {
  static const logical_encoding enc{
      "one_qubit",
      3,
      {{"0", 0b001}, {"1", 0b010}},
      {{"a", 0b100}},
  };
  return enc;
}

const logical_encoding& two_qubit_encoding() {
  static const logical_encoding enc{
      "two_qubit",
      6,
      {{"00", 0b001001}, {"01", 0b001010}, {"10", 0b010001}, {"11", 0b010010}},
      {{"a1", 0b011000}, {"a2", 0b000011}},
  };
  return enc;
}

cvector encoded_state(const logical_encoding& enc, const std::string& label) {
  for (const auto& [name, idx] : enc.logical_kets)
    if (name == label) return cvector::Unit(enc.dim(), idx);
  for (const auto& [name, idx] : enc.auxiliary_kets)
    if (name == label) return cvector::Unit(enc.dim(), idx);
  throw unknown_label("encoded_state: no ket labelled '" + label + "' in " + enc.name);
}

cmatrix logical_basis(const logical_encoding& enc) {
  cmatrix basis = cmatrix::Zero(enc.dim(), enc.logical_dim());
  for (int c = 0; c < enc.logical_dim(); ++c)
    basis(enc.logical_kets[c].second, c) = 1.0;
  return basis;
}

cmatrix logical_projector(const logical_encoding& enc) {
  cmatrix basis = logical_basis(enc);
  return basis * basis.adjoint();
}

cmatrix encoded_projector(const logical_encoding& enc) {
  cmatrix proj = logical_projector(enc);
  for (const auto& [name, idx] : enc.auxiliary_kets) {
    (void)name;
    proj(idx, idx) += 1.0;
  }
  return proj;
}

cmatrix build_xxz(const std::map<std::pair<int, int>, std::pair<double, double>>& couplings,
                  int n) {
  cmatrix h = cmatrix::Zero(1L << n, 1L << n);
  for (const auto& [pair, j] : couplings)
    h += xxz_term(pair.first, pair.second, j.first, j.second, n);
  return h;
}

time_dependent_hamiltonian build_h1(const gate_params_1q& params) {
  const double c = std::cos(params.phi1);
  const double s = std::sin(params.phi1);
  std::map<std::pair<int, int>, std::pair<double, double>> couplings{
      {{1, 2}, {-0.5 * c * std::cos(params.theta1 / 2.0), 0.0}},
      {{1, 3}, {+0.5 * c * std::sin(params.theta1 / 2.0), 0.0}},
      {{2, 3}, {0.0, s}},
  };
  return {build_xxz(couplings, 3), params.env};
}

time_dependent_hamiltonian build_h2(const gate_params_2q& params) {
  const double c = std::cos(params.phi2);
  const double s = std::sin(params.phi2);
  std::map<std::pair<int, int>, std::pair<double, double>> couplings{
      {{2, 5}, {-0.5 * c * std::cos(params.theta2 / 2.0), 0.0}},
      {{2, 6}, {+0.5 * c * std::sin(params.theta2 / 2.0), 0.0}},
      {{2, 3}, {0.0, s}},
  };
  return {build_xxz(couplings, 6), params.env};
}

}  // namespace holodd
