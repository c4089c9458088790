#include "irwa/models.hpp"

#include <stdexcept>
#include <string>

#include "irwa/numerics.hpp"

namespace irwa {

CouplingPair couplings_for(ModelKind kind, const SystemParams& p, const CutoffPolicy& policy) {
    switch (kind) {
        case ModelKind::JC: return {p.g, 0.0};
        case ModelKind::Rabi: return {p.g, p.g};
        case ModelKind::IRWA: return averaged_couplings(p, policy);
    }
    throw std::logic_error("couplings_for: unknown model kind");
}

HermitianOperator free_hamiltonian(const SystemParams& p, const CompositeSpace& space) {
    if (space.n_qubits != 1)
        throw std::invalid_argument("free_hamiltonian: expected a single-qubit space");
    ComplexMatrix h = 0.5 * p.omega_a * embed(pauli(Pauli::Z), 0, space) +
                      p.omega_r * embed(number_operator(space.fock), space.resonator_slot(), space);
    return HermitianOperator(std::move(h));
}

HermitianOperator build_hamiltonian(ModelKind kind, const SystemParams& p,
                                    const CutoffPolicy& policy, const CompositeSpace& space) {
    if (space.n_qubits != 1)
        throw std::invalid_argument("build_hamiltonian: expected a single-qubit space");
    const CouplingPair c = couplings_for(kind, p, policy);
    const RotatingOps ops = rotating_ops(space, 0);
    ComplexMatrix h = 0.5 * p.omega_a * embed(pauli(Pauli::Z), 0, space) +
                      p.omega_r * embed(number_operator(space.fock), space.resonator_slot(), space) +
                      c.g_r * ops.x_plus + c.g_ar * ops.y_plus;
    return HermitianOperator(std::move(h));
}

MultiQubitParams::MultiQubitParams(double omega_r, std::vector<QubitParams> qubits,
                                   CutoffPolicy policy)
    : omega_r(omega_r), qubits(std::move(qubits)), policy(policy) {
    if (!(omega_r > 0.0)) throw std::invalid_argument("MultiQubitParams: omega_r must be > 0");
    if (this->qubits.empty()) throw std::invalid_argument("MultiQubitParams: need at least one qubit");
    for (const auto& q : this->qubits) {
        if (q.omega_a < 0.0) throw std::invalid_argument("MultiQubitParams: omega_a must be >= 0");
        if (q.g < 0.0) throw std::invalid_argument("MultiQubitParams: g must be >= 0");
    }
}

SystemParams MultiQubitParams::params_for(int j) const {
    if (j < 0 || j >= n_qubits())
        throw std::invalid_argument("MultiQubitParams: qubit index out of range");
    return {omega_r, qubits[j].omega_a, qubits[j].g};
}

MultiQubitParams MultiQubitParams::equal_qubits(const SystemParams& p, int n,
                                                const CutoffPolicy& policy) {
    return {p.omega_r, std::vector<QubitParams>(size_t(n), {p.omega_a, p.g}), policy};
}

HermitianOperator build_multiqubit(ModelKind kind, const MultiQubitParams& mp,
                                   const CompositeSpace& space) {
    if (space.n_qubits != mp.n_qubits())
        throw std::invalid_argument("build_multiqubit: space has " +
                                    std::to_string(space.n_qubits) + " qubits, params have " +
                                    std::to_string(mp.n_qubits()));
    ComplexMatrix h =
        mp.omega_r * embed(number_operator(space.fock), space.resonator_slot(), space);
    for (int j = 0; j < mp.n_qubits(); ++j) {
        const SystemParams pj = mp.params_for(j);
        const CouplingPair c = couplings_for(kind, pj, mp.policy);
        const RotatingOps ops = rotating_ops(space, j);
        h += 0.5 * pj.omega_a * embed(pauli(Pauli::Z), j, space);
        h += c.g_r * ops.x_plus + c.g_ar * ops.y_plus;
    }
    return HermitianOperator(std::move(h));
}

ComplexMatrix parity_operator(const CompositeSpace& space) {
    const int fd = space.fock.dim();
    ComplexMatrix photon_parity = ComplexMatrix::Zero(fd, fd);
    for (int n = 0; n < fd; ++n) photon_parity(n, n) = (n % 2 == 0) ? 1.0 : -1.0;

    ComplexMatrix parity = embed(photon_parity, space.resonator_slot(), space);
    for (int j = 0; j < space.n_qubits; ++j)
        parity = embed(pauli(Pauli::Z), j, space) * parity;
    return parity;
}

ComplexMatrix total_excitation(const CompositeSpace& space) {
    ComplexMatrix n = embed(number_operator(space.fock), space.resonator_slot(), space);
    for (int j = 0; j < space.n_qubits; ++j)
        n += embed(pauli(Pauli::Plus) * pauli(Pauli::Minus), j, space);
    return n;
}

}  // namespace irwa
