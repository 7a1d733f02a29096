#include "holodd/operators.hpp"

#include <string>

namespace holodd {

namespace {

cmatrix make_pauli(pauli_axis axis) {
  cmatrix m(2, 2);
  const complexd i1(0.0, 1.0);
  switch (axis) {
    case pauli_axis::I: m << 1, 0, 0, 1; break;
    case pauli_axis::X: m << 0, 1, 1, 0; break;
    case pauli_axis::Y: m << 0, -i1, i1, 0; break;
    case pauli_axis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

const cmatrix& sigma(pauli_axis axis) {
  static const cmatrix id = make_pauli(pauli_axis::I);
  static const cmatrix sx = make_pauli(pauli_axis::X);
  static const cmatrix sy = make_pauli(pauli_axis::Y);
  static const cmatrix sz = make_pauli(pauli_axis::Z);
  switch (axis) {
    case pauli_axis::X: return sx;
    case pauli_axis::Y: return sy;
    case pauli_axis::Z: return sz;
    default: return id;
  }
}

cmatrix pauli_on(pauli_axis axis, int k, int n) {
  if (k < 1 || k > n)
    throw index_out_of_range("pauli_on: qubit " + std::to_string(k) +
                             " on register of " + std::to_string(n));
  cmatrix out = (k == 1) ? sigma(axis) : cmatrix(cmatrix::Identity(2, 2));
  for (int q = 2; q <= n; ++q)
    out = kron(out, q == k ? sigma(axis) : cmatrix(cmatrix::Identity(2, 2)));
  return out;
}

cmatrix collective_pauli(pauli_axis axis, int n) {
  cmatrix out = sigma(axis);
  for (int q = 2; q <= n; ++q) out = kron(out, sigma(axis));
  return out;
}

cmatrix xxz_term(int k, int l, double jx, double jz, int n) {
  if (k >= l) throw invalid_pair_order("xxz_term: need k < l, got (" +
                                       std::to_string(k) + "," + std::to_string(l) + ")");
  if (k < 1 || l > n)
    throw index_out_of_range("xxz_term: pair (" + std::to_string(k) + "," +
                             std::to_string(l) + ") on register of " + std::to_string(n));
  const cmatrix xx = pauli_on(pauli_axis::X, k, n) * pauli_on(pauli_axis::X, l, n);
  const cmatrix yy = pauli_on(pauli_axis::Y, k, n) * pauli_on(pauli_axis::Y, l, n);
  const cmatrix zz = pauli_on(pauli_axis::Z, k, n) * pauli_on(pauli_axis::Z, l, n);
  return jx * (xx + yy) + jz * zz;
}

}  // namespace holodd
