#pragma once

#include <vector>

#include "irwa/averaging.hpp"
#include "irwa/quantize.hpp"
#include "irwa/types.hpp"

namespace irwa {

// JC keeps only the co-rotating terms at full strength (g_r = g, g_ar = 0),
// Rabi keeps both at full strength (g_r = g_ar = g), IRWA weights each by
// the cutoff function at its oscillation frequency.
enum class ModelKind { JC, Rabi, IRWA };

// Couplings a model kind assigns at an operating point. The policy is only
// consulted for IRWA.
CouplingPair couplings_for(ModelKind kind, const SystemParams& p, const CutoffPolicy& policy);

// H = (omega_a/2) sigma_z + omega_r a^dag a + g_r X_+ + g_ar Y_+
// on a single-qubit composite space.
HermitianOperator build_hamiltonian(ModelKind kind, const SystemParams& p,
                                    const CutoffPolicy& policy, const CompositeSpace& space);

// Free part only: (omega_a/2) sigma_z + omega_r a^dag a.
HermitianOperator free_hamiltonian(const SystemParams& p, const CompositeSpace& space);

struct QubitParams {
    double omega_a;
    double g;
};

// Several qubits sharing one resonator mode; couplings may differ per qubit.
struct MultiQubitParams {
    double omega_r;
    std::vector<QubitParams> qubits;
    CutoffPolicy policy;

    MultiQubitParams(double omega_r, std::vector<QubitParams> qubits, CutoffPolicy policy);
    int n_qubits() const { return int(qubits.size()); }
    SystemParams params_for(int j) const;
    static MultiQubitParams equal_qubits(const SystemParams& p, int n, const CutoffPolicy& policy);
};

// Sum_j (omega_a^j/2) sigma_z^j + omega_r a^dag a + Sum_j (g_r^j X_+^j + g_ar^j Y_+^j).
HermitianOperator build_multiqubit(ModelKind kind, const MultiQubitParams& mp,
                                   const CompositeSpace& space);

// Z2 parity (prod_j sigma_z^j) x exp(i pi a^dag a); commutes with every kind.
ComplexMatrix parity_operator(const CompositeSpace& space);

// a^dag a + Sum_j sigma_+^j sigma_-^j; conserved by JC only.
ComplexMatrix total_excitation(const CompositeSpace& space);

}  // namespace irwa
