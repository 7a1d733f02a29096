#include <doctest.h>

#include <set>

#include "holodd/hamiltonian.hpp"
#include "test_util.hpp"

using namespace holodd;
using namespace holodd_test;

TEST_CASE("envelope area is pi for both kinds") {
  for (envelope_kind kind : {envelope_kind::constant, envelope_kind::sine}) {
    for (double T : {0.25, 1.0, 2.5}) {
      const envelope env{kind, T};
      CHECK(std::abs(env.area(0.0, T, 200000) - pi) <= 1e-10);
      // J stays non-negative across the window
      for (int i = 0; i <= 20; ++i) CHECK(env.j(T * i / 20.0) >= -1e-15);
    }
  }
}

TEST_CASE("envelope sub-window areas accumulate") {
  const envelope env{envelope_kind::sine, 1.0};
  const double a1 = env.area(0.0, 0.37, 50000);
  const double a2 = env.area(0.37, 1.0, 50000);
  CHECK(std::abs(a1 + a2 - pi) < 1e-9);
}

TEST_CASE("encoded states carry the documented bit patterns") {
  const auto& e1 = one_qubit_encoding();
  CHECK(encoded_state(e1, "0")(0b001) == complexd(1, 0));
  CHECK(encoded_state(e1, "1")(0b010) == complexd(1, 0));
  CHECK(encoded_state(e1, "a")(0b100) == complexd(1, 0));
  CHECK(encoded_state(e1, "0").norm() == doctest::Approx(1.0));

  const auto& e2 = two_qubit_encoding();
  CHECK(encoded_state(e2, "00")(0b001001) == complexd(1, 0));
  CHECK(encoded_state(e2, "01")(0b001010) == complexd(1, 0));
  CHECK(encoded_state(e2, "10")(0b010001) == complexd(1, 0));
  CHECK(encoded_state(e2, "11")(0b010010) == complexd(1, 0));
  CHECK(encoded_state(e2, "a1")(0b011000) == complexd(1, 0));
  CHECK(encoded_state(e2, "a2")(0b000011) == complexd(1, 0));

  CHECK_THROWS_AS((void)encoded_state(e1, "2"), unknown_label);

  // all listed kets mutually orthogonal: distinct basis indices
  std::set<long> seen;
  for (const auto& [name, idx] : e2.logical_kets) seen.insert(idx);
  for (const auto& [name, idx] : e2.auxiliary_kets) seen.insert(idx);
  CHECK(seen.size() == 6);
}

TEST_CASE("build_xxz sums terms") {
  CHECK(build_xxz({}, 3).cwiseAbs().maxCoeff() == 0.0);

  const cmatrix single = build_xxz({{{1, 2}, {0.4, -0.7}}}, 3);
  CHECK(max_abs_diff(single, xxz_term(1, 2, 0.4, -0.7, 3)) == 0.0);

  const cmatrix two = build_xxz({{{1, 2}, {0.4, -0.7}}, {{2, 3}, {1.1, 0.2}}}, 3);
  CHECK(is_hermitian(two));
  const cmatrix y = collective_pauli(pauli_axis::Y, 3);
  CHECK(op_norm(two * y - y * two) <= 1e-13);
}

TEST_CASE("build_h1 special parameter points") {
  // cos(phi)=0 leaves only the ZZ term
  const auto h = build_h1({0.9, pi / 2.0, {}});
  CHECK(max_abs_diff(h.constant_part, xxz_term(2, 3, 0.0, 1.0, 3)) < 1e-15);
  const auto& enc = one_qubit_encoding();
  CHECK(h.constant_part(0b001, 0b001).real() == doctest::Approx(-1.0));
  CHECK(h.constant_part(0b010, 0b010).real() == doctest::Approx(-1.0));
  CHECK(h.constant_part(0b100, 0b100).real() == doctest::Approx(+1.0));

  // theta=0, phi=0: the auxiliary couples only to |1>L, amplitude -1
  const auto h2 = build_h1({0.0, 0.0, {}});
  CHECK(std::abs(h2.constant_part(0b100, 0b001)) < 1e-15);
  CHECK(h2.constant_part(0b100, 0b010).real() == doctest::Approx(-1.0));
  CHECK(std::abs(h2.constant_part(0b001, 0b001)) < 1e-15);
  (void)enc;
}

TEST_CASE("build_h1 projected block matches the closed form") {
  const double theta = 0.7, phi = 0.3;
  const auto h = build_h1({theta, phi, {}});
  const long i0 = 0b001, i1 = 0b010, ia = 0b100;
  const double c = std::cos(phi), s = std::sin(phi);

  CHECK(h.constant_part(ia, i0).real() ==
        doctest::Approx(c * std::sin(theta / 2.0)).epsilon(1e-13));
  CHECK(h.constant_part(ia, i1).real() ==
        doctest::Approx(-c * std::cos(theta / 2.0)).epsilon(1e-13));
  CHECK(h.constant_part(ia, ia).real() == doctest::Approx(s).epsilon(1e-13));
  CHECK(h.constant_part(i0, i0).real() == doctest::Approx(-s).epsilon(1e-13));
  CHECK(h.constant_part(i1, i1).real() == doctest::Approx(-s).epsilon(1e-13));
  CHECK(std::abs(h.constant_part(i0, i1)) < 1e-15);

  // H(t) scales the fixed part by the envelope
  CHECK(max_abs_diff(h.at(0.5), h.env.j(0.5) * h.constant_part) == 0.0);
}

TEST_CASE("build_h2 special parameter points") {
  const auto h = build_h2({1.3, pi / 2.0, {}});
  CHECK(max_abs_diff(h.constant_part, xxz_term(2, 3, 0.0, 1.0, 6)) < 1e-15);

  // theta=0: |a1> couples only to |01>L and |a2> only to |10>L
  const auto h0 = build_h2({0.0, 0.0, {}});
  const long a1 = 0b011000, a2 = 0b000011;
  CHECK(std::abs(h0.constant_part(a1, 0b001001)) < 1e-15);
  CHECK(h0.constant_part(a1, 0b001010).real() == doctest::Approx(-1.0));
  CHECK(h0.constant_part(a2, 0b010001).real() == doctest::Approx(-1.0));
  CHECK(std::abs(h0.constant_part(a2, 0b010010)) < 1e-15);
}

TEST_CASE("build_h2 projected block matches the closed form element by element") {
  const double theta = 1.1, phi = -0.4;
  const auto h = build_h2({theta, phi, {}});
  const double c = std::cos(phi), s = std::sin(phi);
  const double sh = std::sin(theta / 2.0), ch = std::cos(theta / 2.0);
  const long i00 = 0b001001, i01 = 0b001010, i10 = 0b010001, i11 = 0b010010;
  const long a1 = 0b011000, a2 = 0b000011;
  const std::vector<long> all{i00, i01, i10, i11, a1, a2};

  cmatrix expected = cmatrix::Zero(6, 6);
  expected(0, 0) = expected(1, 1) = expected(2, 2) = expected(3, 3) = -s;
  expected(4, 4) = expected(5, 5) = s;
  expected(4, 0) = expected(0, 4) = c * sh;
  expected(4, 1) = expected(1, 4) = -c * ch;
  expected(5, 2) = expected(2, 5) = -c * ch;
  expected(5, 3) = expected(3, 5) = c * sh;

  for (int r = 0; r < 6; ++r)
    for (int cc = 0; cc < 6; ++cc)
      CHECK(std::abs(h.constant_part(all[r], all[cc]) - expected(r, cc)) <= 1e-13);
}

TEST_CASE("gate Hamiltonians commute with the decoupling operations") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 6; ++rep) {
    const auto h1 = build_h1({uniform(rng, -pi, pi), uniform(rng, -pi, pi), {}});
    for (pauli_axis a : {pauli_axis::X, pauli_axis::Y, pauli_axis::Z}) {
      const cmatrix p = collective_pauli(a, 3);
      CHECK(op_norm(h1.constant_part * p - p * h1.constant_part) <= 1e-13);
    }
    const auto h2 = build_h2({uniform(rng, -pi, pi), uniform(rng, -pi, pi), {}});
    for (pauli_axis a : {pauli_axis::X, pauli_axis::Y, pauli_axis::Z}) {
      const cmatrix p = collective_pauli(a, 6);
      CHECK(op_norm(h2.constant_part * p - p * h2.constant_part) <= 1e-13);
    }
  }
}

TEST_CASE("encoded kets span an invariant subspace") {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 6; ++rep) {
    const auto h1 = build_h1({uniform(rng, -pi, pi), uniform(rng, -pi, pi), {}});
    const cmatrix p1 = encoded_projector(one_qubit_encoding());
    const cmatrix id8 = cmatrix::Identity(8, 8);
    CHECK(op_norm((id8 - p1) * h1.constant_part * p1) <= 1e-13);

    const auto h2 = build_h2({uniform(rng, -pi, pi), uniform(rng, -pi, pi), {}});
    const cmatrix p2 = encoded_projector(two_qubit_encoding());
    const cmatrix id64 = cmatrix::Identity(64, 64);
    CHECK(op_norm((id64 - p2) * h2.constant_part * p2) <= 1e-13);
  }
}

TEST_CASE("dark/bright basis form with the global-phase term restored") {
  std::mt19937_64 rng(33);
  const auto& enc = one_qubit_encoding();
  for (int rep = 0; rep < 6; ++rep) {
    const double theta = uniform(rng, -pi, pi), phi = uniform(rng, -pi, pi);
    const auto h = build_h1({theta, phi, {}});
    const double sh = std::sin(theta / 2.0), ch = std::cos(theta / 2.0);

    cmatrix basis(8, 3);  // (|d>, |b>, |a>)
    basis.col(0) = ch * encoded_state(enc, "0") + sh * encoded_state(enc, "1");
    basis.col(1) = sh * encoded_state(enc, "0") - ch * encoded_state(enc, "1");
    basis.col(2) = encoded_state(enc, "a");

    const cmatrix shifted =
        h.constant_part + std::sin(phi) * encoded_projector(enc);
    const cmatrix block = basis.adjoint() * shifted * basis;

    cmatrix expected = cmatrix::Zero(3, 3);
    expected(1, 2) = expected(2, 1) = std::cos(phi);
    expected(2, 2) = 2.0 * std::sin(phi);
    CHECK(max_abs_diff(block, expected) <= 1e-13);
  }
}

TEST_CASE("build_xxz validates indices") {
  CHECK_THROWS_AS((void)build_xxz({{{1, 5}, {1.0, 0.0}}}, 3), index_out_of_range);
}
