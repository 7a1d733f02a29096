#pragma once

// Pauli operators on indexed qubits of an N-qubit register, collective
// decoupling operators and XXZ two-body terms.
//
// Qubit ordering convention, fixed globally: index 1 is the leftmost
// tensor factor, i.e. the most significant bit of a basis-state integer.
// |001> on three qubits is basis state 1 with qubit 3 excited.

#include "holodd/linalg.hpp"

namespace holodd {

enum class pauli_axis { I, X, Y, Z };

const cmatrix& sigma(pauli_axis axis);  // the 2x2 Pauli matrix

// I (x) ... (x) sigma_axis at position k (x) ... (x) I on n qubits, 1-based k
cmatrix pauli_on(pauli_axis axis, int k, int n);

// n-fold tensor power of one Pauli, the decoupling operations
cmatrix collective_pauli(pauli_axis axis, int n);

// jx*(XX + YY) + jz*ZZ acting on qubits k < l of an n-qubit register
cmatrix xxz_term(int k, int l, double jx, double jz, int n);

}  // namespace holodd
