#include <doctest.h>

#include "holodd/hamiltonian.hpp"
#include "holodd/linalg.hpp"
#include "holodd/operators.hpp"
#include "test_util.hpp"

using namespace holodd;
using namespace holodd_test;

TEST_CASE("kron identity and Pauli cases") {
  const cmatrix i2 = cmatrix::Identity(2, 2);
  CHECK(max_abs_diff(kron(i2, i2), cmatrix::Identity(4, 4)) == 0.0);

  const cmatrix xx = kron(sigma(pauli_axis::X), sigma(pauli_axis::X));
  cmatrix anti = cmatrix::Zero(4, 4);
  anti(0, 3) = anti(1, 2) = anti(2, 1) = anti(3, 0) = 1.0;
  CHECK(max_abs_diff(xx, anti) == 0.0);

  const cmatrix zz = kron(sigma(pauli_axis::Z), sigma(pauli_axis::Z));
  cmatrix diag = cmatrix::Zero(4, 4);
  diag(0, 0) = diag(3, 3) = 1.0;
  diag(1, 1) = diag(2, 2) = -1.0;
  CHECK(max_abs_diff(zz, diag) == 0.0);
}

TEST_CASE("kron entry definition on random inputs") {
  std::mt19937_64 rng(1);
  const cmatrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 4, 4);
  const cmatrix k = kron(a, b);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          CHECK(std::abs(k(i * 4 + p, j * 4 + q) - a(i, j) * b(p, q)) == 0.0);
}

TEST_CASE("kron associativity") {
  std::mt19937_64 rng(2);
  const cmatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3),
                c = random_matrix(rng, 2, 2);
  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-14);
}

TEST_CASE("matexp_hermitian diagonal and Pauli rotation") {
  const double t = 0.83;
  const cmatrix u = matexp_hermitian(sigma(pauli_axis::Z), t);
  CHECK(std::abs(u(0, 0) - std::exp(complexd(0, -t))) < 1e-14);
  CHECK(std::abs(u(1, 1) - std::exp(complexd(0, t))) < 1e-14);
  CHECK(std::abs(u(0, 1)) < 1e-15);

  // exp(-i pi/2 X) = -iX
  const cmatrix v = matexp_hermitian(sigma(pauli_axis::X), pi / 2.0);
  CHECK(max_abs_diff(v, complexd(0, -1) * sigma(pauli_axis::X)) < 1e-14);
}

TEST_CASE("matexp_hermitian agrees with step-integrated propagation") {
  // oracle: piecewise-constant product integration with 1e4 steps
  const auto h = build_h1({0.7, 0.3, {envelope_kind::constant, 1.0}});
  const long n = 10000;
  const double dt = 1.0 / static_cast<double>(n);
  cmatrix u_steps = cmatrix::Identity(8, 8);
  for (long i = 0; i < n; ++i) {
    const double t_mid = (static_cast<double>(i) + 0.5) * dt;
    u_steps = matexp_hermitian(h.env.j(t_mid) * h.constant_part, dt) * u_steps;
  }
  const cmatrix u_exact = matexp_hermitian(h.constant_part, h.env.area(0.0, 1.0, n));
  CHECK(max_abs_diff(u_steps, u_exact) < 1e-8);
}

TEST_CASE("matexp_hermitian rejects non-Hermitian input") {
  cmatrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS((void)matexp_hermitian(bad, 1.0), not_hermitian);
}

TEST_CASE("matexp_hermitian enforces the dense-storage dimension contract") {
  CHECK_THROWS_AS((void)matexp_hermitian(cmatrix::Identity(max_dim + 1, max_dim + 1), 1.0),
                  dimension_mismatch);
}

TEST_CASE("matexp semigroup and unitarity properties") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const cmatrix h = random_hermitian(rng, 8);
    const double t = uniform(rng, -2, 2), s = uniform(rng, -2, 2);
    CHECK(op_norm(matexp_hermitian(h, t) * matexp_hermitian(h, s) -
                  matexp_hermitian(h, t + s)) <= 1e-10);
  }
  for (int dim : {2, 8, 64, 256}) {
    const cmatrix u = matexp_hermitian(random_hermitian(rng, dim), 1.3);
    CHECK((u.adjoint() * u - cmatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

namespace {

// independent oracle: partial trace over the second factor by definition
cmatrix trace_out_second(const cmatrix& rho, int da, int db) {
  cmatrix out = cmatrix::Zero(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < db; ++k) out(i, j) += rho(i * db + k, j * db + k);
  return out;
}

}  // namespace

TEST_CASE("partial_trace of a Bell state gives a maximally mixed qubit") {
  cvector bell = cvector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const cmatrix rho = bell * bell.adjoint();
  CHECK(max_abs_diff(partial_trace(rho, {2, 2}, {0}), 0.5 * cmatrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("partial_trace of a product state recovers the factor") {
  std::mt19937_64 rng(4);
  const cvector a = random_state(rng, 4), b = random_state(rng, 3);
  const cmatrix rho = kron(a * a.adjoint(), b * b.adjoint());
  CHECK(max_abs_diff(partial_trace(rho, {4, 3}, {0}), a * a.adjoint()) < 1e-14);
  CHECK(max_abs_diff(partial_trace(rho, {4, 3}, {1}), b * b.adjoint()) < 1e-14);
}

TEST_CASE("partial_trace matches the index-summation oracle on random states") {
  std::mt19937_64 rng(5);
  const cvector psi = random_state(rng, 32);
  const cmatrix rho = psi * psi.adjoint();
  const cmatrix reduced = partial_trace(rho, {8, 4}, {0});
  CHECK(max_abs_diff(reduced, trace_out_second(rho, 8, 4)) < 1e-15);
  CHECK(std::abs(reduced.trace().real() - 1.0) <= 1e-12);
  CHECK(is_hermitian(reduced));
}

TEST_CASE("partial_trace is linear and trace preserving") {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 5; ++rep) {
    const cmatrix r1 = random_hermitian(rng, 12), r2 = random_hermitian(rng, 12);
    const double w = uniform(rng, -2, 2);
    const cmatrix lhs = partial_trace(r1 + w * r2, {3, 4}, {1});
    const cmatrix rhs =
        partial_trace(r1, {3, 4}, {1}) + w * partial_trace(r2, {3, 4}, {1});
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    CHECK(std::abs(partial_trace(r1, {3, 4}, {1}).trace() - r1.trace()) < 1e-12);
  }
}

TEST_CASE("partial_trace rejects inconsistent dims") {
  CHECK_THROWS_AS((void)partial_trace(cmatrix::Identity(6, 6), {2, 2}, {0}),
                  dimension_mismatch);
}

TEST_CASE("norms and dagger") {
  CHECK(op_norm(sigma(pauli_axis::X)) == doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937_64 rng(7);
  const cmatrix a = random_matrix(rng, 6, 6);
  CHECK(max_abs_diff(dagger(dagger(a)), a) == 0.0);

  // oracle: SVD
  Eigen::JacobiSVD<cmatrix> svd(a);
  CHECK(op_norm(a) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-10));
  CHECK(op_norm(a) <= frob_norm(a) + 1e-12);
}

TEST_CASE("matmul rejects mismatched dims") {
  CHECK_THROWS_AS((void)matmul(cmatrix::Identity(2, 2), cmatrix::Identity(3, 3)),
                  dimension_mismatch);
  const cmatrix x = sigma(pauli_axis::X), z = sigma(pauli_axis::Z);
  CHECK(max_abs_diff(matmul(x, z), x * z) == 0.0);
}

TEST_CASE("hermiticity and unitarity predicates") {
  CHECK(is_hermitian(sigma(pauli_axis::Y)));
  CHECK(is_unitary(sigma(pauli_axis::Y)));
  cmatrix skew(2, 2);
  skew << 0, 1, -1, 0;
  CHECK_FALSE(is_hermitian(skew));
  CHECK_FALSE(is_unitary(2.0 * cmatrix::Identity(2, 2)));
}
