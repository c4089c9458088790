#pragma once

#include <span>
#include <string>
#include <vector>

#include "irwa/averaging.hpp"
#include "irwa/models.hpp"
#include "irwa/quantize.hpp"
#include "irwa/types.hpp"

namespace irwa {

// Which couplings enter the second-order effective model: RWA keeps only the
// bare co-rotating coupling (g, 0), NonRWA keeps both at full strength
// (g, g), IRWA applies the averaging kernel to each family.
enum class DispersiveVariant { RWA, NonRWA, IRWA };

CouplingPair couplings_for_variant(DispersiveVariant variant, const SystemParams& p,
                                   const CutoffPolicy& policy);

// Expansion parameters of the dispersive transformation. Exceeding the
// threshold degrades the second-order model but everything stays computable,
// so validity is advisory rather than an error.
struct SmallParams {
    double lambda = 0;      // co-rotating: g_r / Delta
    double big_lambda = 0;  // counter-rotating: g_ar / Sigma
    double threshold = 0.1;

    bool valid() const;
};

SmallParams small_params(const SystemParams& p, const CouplingPair& cp, double threshold = 0.1);

// Qubit-conditioned resonator pull for explicit couplings:
// chi = g_r^2/Delta + g_ar^2/Sigma.
double dispersive_chi(const SystemParams& p, const CouplingPair& cp);

struct DispersiveShifts {
    double chi_rwa = 0;              // g^2/Delta
    double chi_nrwa = 0;             // g^2/Delta + g^2/Sigma
    double chi_irwa = 0;             // g_r^2/Delta + g_ar^2/Sigma
    double lamb_shift = 0;           // vacuum qubit shift g^2/Delta
    double ac_stark_per_photon = 0;  // qubit shift per photon, 2 g^2/Delta
};

DispersiveShifts dispersive_shifts(const SystemParams& p, const CutoffPolicy& policy);

// Resonator frequency shift conditioned on the qubit state.
struct ShiftPair {
    double qubit_up = 0;    // qubit in |e>: omega_r + chi
    double qubit_down = 0;  // qubit in |g>: omega_r - chi
};

ShiftPair resonator_shift(const SystemParams& p, const CutoffPolicy& policy,
                          DispersiveVariant variant);

// Single-qubit effective Hamiltonian for explicit couplings:
//   (omega_a/2) sz + omega_r n
//   + (1/2)(g_r^2/Delta + g_ar^2/Sigma) sz (2n + 1)
//   + (1/2) g_r g_ar (1/Delta + 1/Sigma) sz (a^dag^2 + a^2).
HermitianOperator effective_hamiltonian_1q_with(const SystemParams& p, const CouplingPair& cp,
                                                const CompositeSpace& space);
HermitianOperator effective_hamiltonian_1q(const SystemParams& p, const CutoffPolicy& policy,
                                           DispersiveVariant variant, const CompositeSpace& space);

// chi extracted from the exact spectrum of the full (non-effective) model:
// chi = ((E_e1 - E_e0) - (E_g1 - E_g0)) / 2, with each level connected to
// its free state |qubit, n> by eigenvector overlap at a converged cutoff.
struct ExactShift {
    double chi = 0;
    bool tie = false;  // an overlap tie was broken by energy order
    int n_max = 0;     // Fock cutoff at which the spectrum converged
};

ExactShift exact_shift_oracle(const SystemParams& p, ModelKind kind, const CutoffPolicy& policy,
                              double tol = 1e-8);

// Resonator-mediated interqubit coupling strengths for a qubit pair (j, k).
struct EffectiveCouplings {
    double j_r = 0;    // RWA flip-flop: g^2/Delta (symmetrized over the pair)
    double j_nr0 = 0;  // full-strength dispersive shift: g^2 (1/Delta + 1/Sigma)
    double j_nr1 = 0;  // full-strength exchange: g^2 (1/Delta - 1/Sigma)
    double j_ir0 = 0;  // qubit j dispersive shift: g_r^2/Delta + g_ar^2/Sigma
    double j_ir1 = 0;  // flip-flop channel
    double j_ir2 = 0;  // double-flip channel
};

EffectiveCouplings effective_couplings(const SystemParams& pj, const CouplingPair& cj,
                                       const SystemParams& pk, const CouplingPair& ck);
EffectiveCouplings effective_couplings(const MultiQubitParams& mp);

std::vector<CouplingPair> variant_couplings(const MultiQubitParams& mp,
                                            DispersiveVariant variant);

// Multi-qubit dispersive Hamiltonian: free terms, per-qubit sz (2n + 1)
// shifts, and for every pair j > k the flip-flop and double-flip interqubit
// terms, each with a 1/2 prefactor.
HermitianOperator effective_hamiltonian_2q_with(const MultiQubitParams& mp,
                                                std::span<const CouplingPair> couplings,
                                                const CompositeSpace& space);
HermitianOperator effective_hamiltonian_2q(const MultiQubitParams& mp, DispersiveVariant variant,
                                           const CompositeSpace& space);

// Two-qubit evolution in a fixed photon sector, in the frame rotating at the
// qubit frequencies. The photon-dependent phase prefactor
// exp(-i t (n + 1/2) (j0_first sz_j + j0_second sz_k)) is factored out of the
// reported block and returned as parameters, so any sector's full unitary
// can be reconstructed as prefactor * block.
struct TwoQubitEvolution {
    double t = 0;
    ComplexMatrix block;  // 4x4, basis |ee>, |eg>, |ge>, |gg>
    double j0_first = 0;
    double j0_second = 0;
    int photon_sector = 0;
    double unitarity_residual = 0;
};

TwoQubitEvolution evolution_2q(const MultiQubitParams& mp, DispersiveVariant variant, double t,
                               int photon_sector = 0);

struct CouplingRow {
    double g = 0;
    EffectiveCouplings j;
    std::string flag;  // empty when the row evaluated cleanly
};

// Effective couplings per operating point; rows that fail (singular detuning,
// unresolvable policy) are flagged with the reason and the sweep continues.
std::vector<CouplingRow> coupling_sweep(std::span<const MultiQubitParams> points);
std::vector<CouplingRow> coupling_sweep(const MultiQubitParams& tmpl,
                                        std::span<const double> g_grid);

// Phase-insensitive overlap of two same-size unitaries: |tr(v^dag u)| / dim.
double gate_fidelity(const ComplexMatrix& u, const ComplexMatrix& v);

// The sqrt(iSWAP) branch generated by a positive flip-flop coupling under
// exp(-iHt): off-diagonal elements -i/sqrt(2). The +i branch differs only by
// single-qubit z rotations.
ComplexMatrix sqrt_iswap_block();

}  // namespace irwa
