#pragma once

#include <span>

#include "irwa/types.hpp"

namespace irwa {

// Truncated single-mode Fock space keeping photon numbers 0..n_max.
struct FockSpace {
    int n_max;

    explicit FockSpace(int n_max);
    int dim() const { return n_max + 1; }
};

// Composite qubit(s) x resonator space. Basis convention (fixed globally):
// qubit slot 0 is the outermost (slowest) index, further qubits follow,
// the resonator is the innermost (fastest) index. Each qubit is ordered
// (|e>, |g>) so that sigma_z |e> = +|e>.
struct CompositeSpace {
    int n_qubits;
    FockSpace fock;

    CompositeSpace(int n_qubits, FockSpace fock);
    int dim() const;
    int resonator_slot() const { return n_qubits; }
};

enum class Pauli { X, Y, Z, Plus, Minus };

ComplexMatrix annihilation(const FockSpace& space);
ComplexMatrix creation(const FockSpace& space);
ComplexMatrix number_operator(const FockSpace& space);
ComplexMatrix pauli(Pauli which);

// Lift a single-slot operator to the composite space (identity elsewhere).
// slot = 0..n_qubits-1 addresses a qubit, slot = n_qubits the resonator.
ComplexMatrix embed(const ComplexMatrix& op, int slot, const CompositeSpace& space);

// Flattened index of the product basis state |q_0 q_1 ... ; n>, with each
// q_j in {0 = e, 1 = g} and n the photon number.
int basis_index(const CompositeSpace& space, std::span<const int> qubit_states, int n);
ComplexVector basis_state(const CompositeSpace& space, std::span<const int> qubit_states, int n);

// Co- and counter-rotating interaction operators for one qubit:
//   X_pm = a sigma_+ pm a^dag sigma_-,  Y_pm = a sigma_- pm a^dag sigma_+.
// X_plus, Y_plus are Hermitian; X_minus, Y_minus anti-Hermitian.
struct RotatingOps {
    ComplexMatrix x_plus, x_minus, y_plus, y_minus;
};

RotatingOps rotating_ops(const CompositeSpace& space, int qubit);

}  // namespace irwa
