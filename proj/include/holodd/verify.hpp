#pragma once

// Named invariant suites runnable from the CLI, plus the parameterized
// residual functions they are built from. The residual functions take the
// matrices under test as inputs so that deliberately corrupted operators
// can be checked against them.

#include <iosfwd>
#include <string>
#include <vector>

#include "holodd/hamiltonian.hpp"
#include "holodd/linalg.hpp"

namespace holodd {

struct check_result {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

// projected logical-block comparisons against the closed-form matrices
double h1_projection_residual(const cmatrix& h1_constant, double theta1, double phi1);
double h2_projection_residual(const cmatrix& h2_constant, double theta2, double phi2);

// max_alpha ||[H, (x)^n sigma_alpha]||
double decoupling_compatibility_residual(const cmatrix& h_constant, int n_qubits);

// ||(I - P) H P|| for the encoded span
double invariant_subspace_residual(const cmatrix& h_constant, const logical_encoding& enc);

// gauge-shifted dark/bright-basis form of the one-qubit Hamiltonian
double db_basis_residual(const cmatrix& h1_constant, double theta1, double phi1);

// ||sum_alpha ((x)sigma_alpha (x) I_E) H ((x)sigma_alpha (x) I_E) + H||
double interaction_cancellation_residual(const cmatrix& h_int, int n_qubits, int env_dim);

// least-squares slope of log(y) against log(x)
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// every invariant suite across the modules; deterministic (fixed seeds)
std::vector<check_result> run_all_checks();

// prints one line per suite; returns the number of failures
int report_checks(const std::vector<check_result>& results, std::ostream& out);

}  // namespace holodd
