#pragma once

#include "irwa/types.hpp"

namespace irwa {

// Full eigendecomposition of a Hermitian operator. Throws EigensolverError
// (naming the dimension) if the underlying iteration does not converge.
// The returned system satisfies || V^dag V - I ||_max <= 1e-10 and
// || H V - V Lambda ||_max <= 1e-9 * ||H||_max; both are verified.
EigenSystem eig_hermitian(const HermitianOperator& h);

// U = exp(-i H t) via spectral decomposition; unitary to 1e-10.
ComplexMatrix expm_i(const HermitianOperator& h, double t);

// Kronecker product, leftmost factor = slowest index. The global basis
// convention is qubit slot 0 outermost, then remaining qubits, resonator
// innermost (last).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace irwa
