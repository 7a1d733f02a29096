#include "holodd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace holodd {

bool is_hermitian(const cmatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const cmatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  cmatrix res = a.adjoint() * a;
  res -= cmatrix::Identity(a.rows(), a.cols());
  return res.cwiseAbs().maxCoeff() <= tol;
}

cmatrix dagger(const cmatrix& a) { return a.adjoint(); }

cmatrix matmul(const cmatrix& a, const cmatrix& b) {
  if (a.cols() != b.rows())
    throw dimension_mismatch("matmul: " + std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()));
  return a * b;
}

cmatrix kron(const cmatrix& a, const cmatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  cmatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

cmatrix matexp_hermitian(const cmatrix& h, double scale) {
  if (h.rows() != h.cols())
    throw dimension_mismatch("matexp_hermitian: matrix not square");
  if (h.rows() > max_dim)
    throw dimension_mismatch("matexp_hermitian: dim " + std::to_string(h.rows()) +
                             " exceeds the supported " + std::to_string(max_dim));
  const double herm_res = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (herm_res > hermiticity_tol)
    throw not_hermitian("matexp_hermitian: max|H - H^dag| = " +
                        std::to_string(herm_res));
  Eigen::SelfAdjointEigenSolver<cmatrix> es(h);
  const Eigen::VectorXd& evals = es.eigenvalues();
  const cmatrix& evecs = es.eigenvectors();
  cvector phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k)
    phases(k) = std::exp(complexd(0.0, -scale * evals(k)));
  return evecs * phases.asDiagonal() * evecs.adjoint();
}

cmatrix partial_trace(const cmatrix& rho, const std::vector<int>& dims,
                      const std::vector<int>& keep) {
  long total = 1;
  for (int d : dims) total *= d;
  if (total != rho.rows() || rho.rows() != rho.cols())
    throw dimension_mismatch("partial_trace: factor dims do not multiply to rho dim");
  for (int k : keep)
    if (k < 0 || k >= static_cast<int>(dims.size()))
      throw index_out_of_range("partial_trace: keep index " + std::to_string(k));

  std::vector<int> traced;
  for (int f = 0; f < static_cast<int>(dims.size()); ++f)
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);

  long keep_dim = 1, traced_dim = 1;
  for (int f : keep) keep_dim *= dims[f];
  for (int f : traced) traced_dim *= dims[f];

  // enumerate (kept row, kept col, traced diagonal) index triples
  const int nf = static_cast<int>(dims.size());
  std::vector<int> rdig(nf), cdig(nf);
  cmatrix out = cmatrix::Zero(keep_dim, keep_dim);
  for (long r = 0; r < keep_dim; ++r) {
    for (long c = 0; c < keep_dim; ++c) {
      // distribute kept digits
      long rr = r, cc = c;
      for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
        rdig[keep[i]] = static_cast<int>(rr % dims[keep[i]]);
        rr /= dims[keep[i]];
        cdig[keep[i]] = static_cast<int>(cc % dims[keep[i]]);
        cc /= dims[keep[i]];
      }
      complexd acc(0.0, 0.0);
      for (long t = 0; t < traced_dim; ++t) {
        long tt = t;
        for (int i = static_cast<int>(traced.size()) - 1; i >= 0; --i) {
          rdig[traced[i]] = cdig[traced[i]] = static_cast<int>(tt % dims[traced[i]]);
          tt /= dims[traced[i]];
        }
        long fr = 0, fc = 0;
        for (int f = 0; f < nf; ++f) {
          fr = fr * dims[f] + rdig[f];
          fc = fc * dims[f] + cdig[f];
        }
        acc += rho(fr, fc);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

double op_norm(const cmatrix& a) {
  // sqrt of the largest eigenvalue of A^dag A; robust for any square/rect A
  Eigen::SelfAdjointEigenSolver<cmatrix> es(a.adjoint() * a);
  const double lmax = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, lmax));
}

double frob_norm(const cmatrix& a) { return a.norm(); }

}  // namespace holodd
