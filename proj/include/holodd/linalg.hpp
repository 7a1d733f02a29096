#pragma once

// Dense complex matrix algebra: Kronecker products, Hermitian matrix
// exponentials, partial traces and norms. Everything here is a pure
// function on value types; Eigen does the heavy lifting.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "holodd/errors.hpp"

namespace holodd {

using cmatrix = Eigen::MatrixXcd;
using cvector = Eigen::VectorXcd;
using complexd = std::complex<double>;

inline constexpr double hermiticity_tol = 1e-10;
inline constexpr double unitarity_tol = 1e-10;
inline constexpr int max_dim = 1024;  // dense-storage contract

// max-abs-entry residuals for the two structural predicates
bool is_hermitian(const cmatrix& a, double tol = hermiticity_tol);
bool is_unitary(const cmatrix& a, double tol = unitarity_tol);

cmatrix dagger(const cmatrix& a);
cmatrix matmul(const cmatrix& a, const cmatrix& b);

// entry ((i*b.dim+k),(j*b.dim+l)) = a(i,j)*b(k,l)
cmatrix kron(const cmatrix& a, const cmatrix& b);

// exp(-i*scale*h) for Hermitian h, via eigendecomposition
cmatrix matexp_hermitian(const cmatrix& h, double scale);

// trace out the subsystems not listed in `keep`; dims are the tensor
// factor dimensions left to right, keep holds 0-based factor indices
cmatrix partial_trace(const cmatrix& rho, const std::vector<int>& dims,
                      const std::vector<int>& keep);

double op_norm(const cmatrix& a);   // largest singular value
double frob_norm(const cmatrix& a);

}  // namespace holodd
