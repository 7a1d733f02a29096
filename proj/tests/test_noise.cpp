#include <doctest.h>

#include "holodd/noise.hpp"
#include "test_util.hpp"

using namespace holodd;
using namespace holodd_test;

TEST_CASE("zero coupling strength gives a zero interaction") {
  for (noise_variant v : {noise_variant::independent, noise_variant::collective,
                          noise_variant::dephasing}) {
    const noise_model nm = sample_noise(5, 3, 4, 0.0, 0.1, v);
    CHECK(build_interaction(nm, 3).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("collective variant shares one bath operator per axis") {
  const noise_model nm = sample_noise(9, 3, 4, 0.3, 0.1, noise_variant::collective);
  for (pauli_axis a : {pauli_axis::X, pauli_axis::Y, pauli_axis::Z}) {
    const cmatrix& first = nm.bath_ops.at({1, a});
    for (int k = 2; k <= 3; ++k)
      CHECK(max_abs_diff(first, nm.bath_ops.at({k, a})) == 0.0);
  }
}

TEST_CASE("dephasing variant keeps only z couplings") {
  const noise_model nm = sample_noise(9, 3, 4, 0.3, 0.1, noise_variant::dephasing);
  for (const auto& [key, op] : nm.bath_ops) CHECK(key.second == pauli_axis::Z);
  CHECK(nm.bath_ops.size() == 3);

  // z-only interactions commute with the collective z pulse
  const cmatrix h = build_interaction(nm, 3);
  const cmatrix p = kron(collective_pauli(pauli_axis::Z, 3), cmatrix::Identity(4, 4));
  CHECK((h * p - p * h).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("sampling is bit-deterministic in the seed") {
  for (noise_variant v : {noise_variant::independent, noise_variant::collective,
                          noise_variant::dephasing}) {
    const noise_model a = sample_noise(1234, 3, 4, 0.3, 0.1, v);
    const noise_model b = sample_noise(1234, 3, 4, 0.3, 0.1, v);
    CHECK(max_abs_diff(a.h_env, b.h_env) == 0.0);
    CHECK(a.bath_ops.size() == b.bath_ops.size());
    for (const auto& [key, op] : a.bath_ops)
      CHECK(max_abs_diff(op, b.bath_ops.at(key)) == 0.0);
    CHECK(max_abs_diff(build_interaction(a, 3), build_interaction(b, 3)) == 0.0);

    const noise_model c = sample_noise(1235, 3, 4, 0.3, 0.1, v);
    CHECK(max_abs_diff(a.h_env, c.h_env) > 0.0);
  }
}

TEST_CASE("bath operators carry the requested norms") {
  const noise_model nm = sample_noise(21, 3, 5, 0.37, 0.12, noise_variant::independent);
  for (const auto& [key, op] : nm.bath_ops) {
    CHECK(is_hermitian(op));
    CHECK(op_norm(op) == doctest::Approx(0.37).epsilon(1e-12));
  }
  CHECK(is_hermitian(nm.h_env));
  CHECK(op_norm(nm.h_env) == doctest::Approx(0.12).epsilon(1e-12));
}

TEST_CASE("single-qubit dephasing interaction is sigma_z (x) B") {
  const noise_model nm = sample_noise(31, 1, 4, 0.2, 0.0, noise_variant::dephasing);
  const cmatrix h = build_interaction(nm, 1);
  CHECK(max_abs_diff(h, kron(sigma(pauli_axis::Z), nm.bath_ops.at({1, pauli_axis::Z}))) ==
        0.0);
}

TEST_CASE("collective conjugation sum annihilates every sampled interaction") {
  for (noise_variant v : {noise_variant::independent, noise_variant::collective,
                          noise_variant::dephasing}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const noise_model nm = sample_noise(seed, 3, 4, 0.3, 0.1, v);
      const cmatrix h = build_interaction(nm, 3);
      cmatrix acc = h;
      for (pauli_axis a : {pauli_axis::X, pauli_axis::Y, pauli_axis::Z}) {
        const cmatrix p = kron(collective_pauli(a, 3), cmatrix::Identity(4, 4));
        acc += p * h * p;
      }
      CHECK(acc.cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("interaction norm satisfies the triangle bound") {
  for (std::uint64_t seed : {3ull, 4ull, 5ull}) {
    const noise_model nm = sample_noise(seed, 3, 4, 0.25, 0.1, noise_variant::independent);
    CHECK(op_norm(build_interaction(nm, 3)) <= 3.0 * 3 * 0.25 + 1e-12);
  }
}

TEST_CASE("build_interaction validates the register size") {
  const noise_model nm = sample_noise(1, 3, 4, 0.1, 0.1, noise_variant::independent);
  CHECK_THROWS_AS((void)build_interaction(nm, 4), dimension_mismatch);
}
