#include "irwa/quantize.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "irwa/numerics.hpp"

namespace irwa {

FockSpace::FockSpace(int n_max) : n_max(n_max) {
    if (n_max < 1) throw std::invalid_argument("FockSpace: n_max must be >= 1");
}

CompositeSpace::CompositeSpace(int n_qubits, FockSpace fock) : n_qubits(n_qubits), fock(fock) {
    if (n_qubits < 1) throw std::invalid_argument("CompositeSpace: need at least one qubit");
}

int CompositeSpace::dim() const {
    return (1 << n_qubits) * fock.dim();
}

ComplexMatrix annihilation(const FockSpace& space) {
    ComplexMatrix a = ComplexMatrix::Zero(space.dim(), space.dim());
    for (int m = 0; m + 1 <= space.n_max; ++m)
        a(m, m + 1) = std::sqrt(double(m + 1));
    return a;
}

ComplexMatrix creation(const FockSpace& space) {
    return annihilation(space).adjoint();
}

ComplexMatrix number_operator(const FockSpace& space) {
    ComplexMatrix n = ComplexMatrix::Zero(space.dim(), space.dim());
    for (int m = 0; m <= space.n_max; ++m) n(m, m) = double(m);
    return n;
}

ComplexMatrix pauli(Pauli which) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    switch (which) {
        case Pauli::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case Pauli::Y:
            m(0, 1) = Complex(0.0, -1.0);
            m(1, 0) = Complex(0.0, 1.0);
            break;
        case Pauli::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        case Pauli::Plus:  // |e><g|
            m(0, 1) = 1.0;
            break;
        case Pauli::Minus:  // |g><e|
            m(1, 0) = 1.0;
            break;
    }
    return m;
}

ComplexMatrix embed(const ComplexMatrix& op, int slot, const CompositeSpace& space) {
    if (slot < 0 || slot > space.n_qubits)
        throw std::invalid_argument("embed: slot " + std::to_string(slot) + " out of range");
    const int expected = (slot == space.resonator_slot()) ? space.fock.dim() : 2;
    if (op.rows() != expected || op.cols() != expected)
        throw std::invalid_argument("embed: operator dimension " + std::to_string(op.rows()) +
                                    " does not match slot dimension " + std::to_string(expected));

    ComplexMatrix out = (slot == 0) ? op : ComplexMatrix(ComplexMatrix::Identity(2, 2));
    for (int s = 1; s < space.n_qubits; ++s)
        out = kron(out, s == slot ? op : ComplexMatrix(ComplexMatrix::Identity(2, 2)));
    const int fd = space.fock.dim();
    out = kron(out, slot == space.resonator_slot() ? op : ComplexMatrix(ComplexMatrix::Identity(fd, fd)));
    return out;
}

int basis_index(const CompositeSpace& space, std::span<const int> qubit_states, int n) {
    if (int(qubit_states.size()) != space.n_qubits)
        throw std::invalid_argument("basis_index: wrong number of qubit states");
    if (n < 0 || n > space.fock.n_max)
        throw std::invalid_argument("basis_index: photon number out of range");
    int idx = 0;
    for (int q : qubit_states) {
        if (q != 0 && q != 1) throw std::invalid_argument("basis_index: qubit state must be 0 (e) or 1 (g)");
        idx = idx * 2 + q;
    }
    return idx * space.fock.dim() + n;
}

ComplexVector basis_state(const CompositeSpace& space, std::span<const int> qubit_states, int n) {
    ComplexVector v = ComplexVector::Zero(space.dim());
    v(basis_index(space, qubit_states, n)) = 1.0;
    return v;
}

RotatingOps rotating_ops(const CompositeSpace& space, int qubit) {
    if (qubit < 0 || qubit >= space.n_qubits)
        throw std::invalid_argument("rotating_ops: qubit index " + std::to_string(qubit) +
                                    " out of range");
    const ComplexMatrix a = embed(annihilation(space.fock), space.resonator_slot(), space);
    const ComplexMatrix sp = embed(pauli(Pauli::Plus), qubit, space);
    const ComplexMatrix sm = embed(pauli(Pauli::Minus), qubit, space);

    const ComplexMatrix a_sp = a * sp;  // a sigma_+
    const ComplexMatrix a_sm = a * sm;  // a sigma_-
    RotatingOps ops;
    ops.x_plus = a_sp + a_sp.adjoint();
    ops.x_minus = a_sp - a_sp.adjoint();
    ops.y_plus = a_sm + a_sm.adjoint();
    ops.y_minus = a_sm - a_sm.adjoint();
    return ops;
}

}  // namespace irwa
