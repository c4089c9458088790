#include "irwa/dispersive.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "irwa/errors.hpp"
#include "irwa/numerics.hpp"
#include "irwa/spectra.hpp"

namespace irwa {

namespace {

void require_dispersive(const SystemParams& p, const char* where) {
    if (p.delta() == 0) {
        std::ostringstream msg;
        msg << where << ": detuning is zero (omega_a = omega_r = " << p.omega_r
            << "), dispersive expansion undefined";
        throw SingularDetuningError(msg.str());
    }
}

}  // namespace

CouplingPair couplings_for_variant(DispersiveVariant variant, const SystemParams& p,
                                   const CutoffPolicy& policy) {
    switch (variant) {
        case DispersiveVariant::RWA:
            return CouplingPair{p.g, 0.0};
        case DispersiveVariant::NonRWA:
            return CouplingPair{p.g, p.g};
        case DispersiveVariant::IRWA:
            return averaged_couplings(p, policy);
    }
    throw std::logic_error("couplings_for_variant: unknown variant");
}

bool SmallParams::valid() const { return std::abs(lambda) <= threshold; }

SmallParams small_params(const SystemParams& p, const CouplingPair& cp, double threshold) {
    require_dispersive(p, "small_params");
    SmallParams out;
    out.lambda = cp.g_r / p.delta();
    out.big_lambda = cp.g_ar / p.sigma();
    out.threshold = threshold;
    return out;
}

double dispersive_chi(const SystemParams& p, const CouplingPair& cp) {
    require_dispersive(p, "dispersive_chi");
    return cp.g_r * cp.g_r / p.delta() + cp.g_ar * cp.g_ar / p.sigma();
}

DispersiveShifts dispersive_shifts(const SystemParams& p, const CutoffPolicy& policy) {
    require_dispersive(p, "dispersive_shifts");
    DispersiveShifts out;
    out.chi_rwa = dispersive_chi(p, CouplingPair{p.g, 0.0});
    out.chi_nrwa = dispersive_chi(p, CouplingPair{p.g, p.g});
    out.chi_irwa = dispersive_chi(p, averaged_couplings(p, policy));
    out.lamb_shift = out.chi_rwa;
    out.ac_stark_per_photon = 2.0 * out.chi_rwa;
    return out;
}

ShiftPair resonator_shift(const SystemParams& p, const CutoffPolicy& policy,
                          DispersiveVariant variant) {
    const double chi = dispersive_chi(p, couplings_for_variant(variant, p, policy));
    return ShiftPair{p.omega_r + chi, p.omega_r - chi};
}

HermitianOperator effective_hamiltonian_1q_with(const SystemParams& p, const CouplingPair& cp,
                                                const CompositeSpace& space) {
    if (space.n_qubits != 1) {
        throw std::invalid_argument("effective_hamiltonian_1q: expected a single-qubit space");
    }
    require_dispersive(p, "effective_hamiltonian_1q");

    const int dim = space.dim();
    const ComplexMatrix sz = embed(pauli(Pauli::Z), 0, space);
    const ComplexMatrix n_op = embed(number_operator(space.fock), 1, space);
    const ComplexMatrix eye = ComplexMatrix::Identity(dim, dim);

    const ComplexMatrix a = annihilation(space.fock);
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix quad = embed(a2 + a2.adjoint(), 1, space);

    const double shift = 0.5 * dispersive_chi(p, cp);
    const double two_photon = 0.5 * cp.g_r * cp.g_ar * (1.0 / p.delta() + 1.0 / p.sigma());

    ComplexMatrix h = 0.5 * p.omega_a * sz + p.omega_r * n_op;
    h += shift * (sz * (2.0 * n_op + eye));
    h += two_photon * (sz * quad);
    return HermitianOperator(std::move(h));
}

HermitianOperator effective_hamiltonian_1q(const SystemParams& p, const CutoffPolicy& policy,
                                           DispersiveVariant variant, const CompositeSpace& space) {
    return effective_hamiltonian_1q_with(p, couplings_for_variant(variant, p, policy), space);
}

ExactShift exact_shift_oracle(const SystemParams& p, ModelKind kind, const CutoffPolicy& policy,
                              double tol) {
    auto builder = [&](int n) {
        return build_hamiltonian(kind, p, policy, CompositeSpace{1, FockSpace{n}});
    };
    const ConvergedSpectrum cs = converged_spectrum(builder, 8, tol);
    const CompositeSpace space{1, FockSpace{cs.n_max}};
    const auto& es = cs.system;
    const int dim = static_cast<int>(es.values.size());

    // Targets in fixed order: |g,0>, |g,1>, |e,0>, |e,1> (qubit 0 = e, 1 = g).
    constexpr int kTargets[4][2] = {{1, 0}, {1, 1}, {0, 0}, {0, 1}};
    constexpr double kTieGap = 1e-6;
    constexpr double kMinOverlap = 0.4;

    double energy[4] = {0, 0, 0, 0};
    std::vector<bool> claimed(static_cast<std::size_t>(dim), false);
    bool tie = false;
    for (int ti = 0; ti < 4; ++ti) {
        const std::array<int, 1> qs{kTargets[ti][0]};
        const int row = basis_index(space, qs, kTargets[ti][1]);
        double best = -1;
        for (int c = 0; c < dim; ++c) {
            if (claimed[static_cast<std::size_t>(c)]) {
                continue;
            }
            best = std::max(best, std::abs(es.vectors(row, c)));
        }
        if (best < kMinOverlap) {
            std::ostringstream msg;
            msg << "exact_shift_oracle: no eigenstate resembles the free state (qubit "
                << (kTargets[ti][0] == 0 ? 'e' : 'g') << ", n = " << kTargets[ti][1]
                << "; best overlap " << best << ") at g = " << p.g;
            throw TrackingError(msg.str());
        }
        int pick = -1;
        int near_best = 0;
        for (int c = 0; c < dim; ++c) {
            if (claimed[static_cast<std::size_t>(c)]) {
                continue;
            }
            if (best - std::abs(es.vectors(row, c)) < kTieGap) {
                ++near_best;
                if (pick < 0) {
                    pick = c;
                }
            }
        }
        if (near_best > 1) {
            tie = true;
        }
        claimed[static_cast<std::size_t>(pick)] = true;
        energy[ti] = es.values[pick];
    }

    ExactShift out;
    out.chi = 0.5 * ((energy[3] - energy[2]) - (energy[1] - energy[0]));
    out.tie = tie;
    out.n_max = cs.n_max;
    return out;
}

EffectiveCouplings effective_couplings(const SystemParams& pj, const CouplingPair& cj,
                                       const SystemParams& pk, const CouplingPair& ck) {
    require_dispersive(pj, "effective_couplings");
    require_dispersive(pk, "effective_couplings");
    const double dj = 1.0 / pj.delta();
    const double dk = 1.0 / pk.delta();
    const double sj = 1.0 / pj.sigma();
    const double sk = 1.0 / pk.sigma();

    EffectiveCouplings out;
    out.j_r = 0.5 * (pj.g * pk.g * (dj + dk));
    out.j_nr0 = 0.5 * (pj.g * pk.g * (dj + dk) + pj.g * pk.g * (sj + sk));
    out.j_nr1 = 0.5 * (pj.g * pk.g * (dj + dk) - pj.g * pk.g * (sj + sk));
    out.j_ir0 = dispersive_chi(pj, cj);
    out.j_ir1 = cj.g_r * ck.g_r * (dj + dk) - cj.g_ar * ck.g_ar * (sj + sk);
    out.j_ir2 = cj.g_r * ck.g_ar * (dj - sk) + cj.g_ar * ck.g_r * (dk - sj);
    return out;
}

EffectiveCouplings effective_couplings(const MultiQubitParams& mp) {
    if (mp.n_qubits() != 2) {
        throw std::invalid_argument("effective_couplings: expected exactly 2 qubits");
    }
    const SystemParams pj = mp.params_for(0);
    const SystemParams pk = mp.params_for(1);
    return effective_couplings(pj, averaged_couplings(pj, mp.policy), pk,
                               averaged_couplings(pk, mp.policy));
}

std::vector<CouplingPair> variant_couplings(const MultiQubitParams& mp,
                                            DispersiveVariant variant) {
    std::vector<CouplingPair> out;
    out.reserve(static_cast<std::size_t>(mp.n_qubits()));
    for (int j = 0; j < mp.n_qubits(); ++j) {
        out.push_back(couplings_for_variant(variant, mp.params_for(j), mp.policy));
    }
    return out;
}

HermitianOperator effective_hamiltonian_2q_with(const MultiQubitParams& mp,
                                                std::span<const CouplingPair> couplings,
                                                const CompositeSpace& space) {
    if (space.n_qubits != mp.n_qubits()) {
        throw std::invalid_argument("effective_hamiltonian_2q: space/qubit count mismatch");
    }
    if (static_cast<int>(couplings.size()) != mp.n_qubits()) {
        throw std::invalid_argument("effective_hamiltonian_2q: one coupling pair per qubit");
    }
    if (mp.n_qubits() < 1) {
        throw std::invalid_argument("effective_hamiltonian_2q: need at least one qubit");
    }

    const int dim = space.dim();
    const ComplexMatrix n_op = embed(number_operator(space.fock), space.resonator_slot(), space);
    const ComplexMatrix eye = ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix two_n_plus_1 = 2.0 * n_op + eye;

    ComplexMatrix h = mp.omega_r * n_op;
    for (int j = 0; j < mp.n_qubits(); ++j) {
        const SystemParams pj = mp.params_for(j);
        require_dispersive(pj, "effective_hamiltonian_2q");
        const ComplexMatrix sz = embed(pauli(Pauli::Z), j, space);
        h += 0.5 * pj.omega_a * sz;
        h += 0.5 * dispersive_chi(pj, couplings[static_cast<std::size_t>(j)]) *
             (sz * two_n_plus_1);
    }

    for (int j = 0; j < mp.n_qubits(); ++j) {
        for (int k = 0; k < j; ++k) {
            const SystemParams pj = mp.params_for(j);
            const SystemParams pk = mp.params_for(k);
            const CouplingPair& cj = couplings[static_cast<std::size_t>(j)];
            const CouplingPair& ck = couplings[static_cast<std::size_t>(k)];
            const double dj = 1.0 / pj.delta();
            const double dk = 1.0 / pk.delta();
            const double sj = 1.0 / pj.sigma();
            const double sk = 1.0 / pk.sigma();

            const double flip = 0.5 * (cj.g_r * ck.g_r * (dj + dk) -
                                       cj.g_ar * ck.g_ar * (sj + sk));
            const double dbl = 0.5 * (cj.g_r * ck.g_ar * (dj - sk) +
                                      cj.g_ar * ck.g_r * (dk - sj));

            const ComplexMatrix sp_j = embed(pauli(Pauli::Plus), j, space);
            const ComplexMatrix sm_j = embed(pauli(Pauli::Minus), j, space);
            const ComplexMatrix sp_k = embed(pauli(Pauli::Plus), k, space);
            const ComplexMatrix sm_k = embed(pauli(Pauli::Minus), k, space);

            h += flip * (sm_j * sp_k + sp_j * sm_k);
            h += dbl * (sm_j * sm_k + sp_j * sp_k);
        }
    }
    return HermitianOperator(std::move(h));
}

HermitianOperator effective_hamiltonian_2q(const MultiQubitParams& mp, DispersiveVariant variant,
                                           const CompositeSpace& space) {
    return effective_hamiltonian_2q_with(mp, variant_couplings(mp, variant), space);
}

TwoQubitEvolution evolution_2q(const MultiQubitParams& mp, DispersiveVariant variant, double t,
                               int photon_sector) {
    if (mp.n_qubits() != 2) {
        throw std::invalid_argument("evolution_2q: expected exactly 2 qubits");
    }
    if (photon_sector < 0) {
        throw std::invalid_argument("evolution_2q: photon sector must be nonnegative");
    }

    const std::vector<CouplingPair> cps = variant_couplings(mp, variant);
    const CompositeSpace space{2, FockSpace{photon_sector + 1}};
    const HermitianOperator h_full = effective_hamiltonian_2q_with(mp, cps, space);

    // Qubit block basis |ee>, |eg>, |ge>, |gg> at the fixed photon number.
    // The dispersive Hamiltonian conserves photon number, so the sector is
    // exactly closed.
    int idx[4];
    int m = 0;
    for (int q0 = 0; q0 <= 1; ++q0) {
        for (int q1 = 0; q1 <= 1; ++q1) {
            const std::array<int, 2> qs{q0, q1};
            idx[m++] = basis_index(space, qs, photon_sector);
        }
    }
    constexpr double kSzFirst[4] = {+1, +1, -1, -1};
    constexpr double kSzSecond[4] = {+1, -1, +1, -1};

    const SystemParams p0 = mp.params_for(0);
    const SystemParams p1 = mp.params_for(1);
    const double j0_first = dispersive_chi(p0, cps[0]);
    const double j0_second = dispersive_chi(p1, cps[1]);

    ComplexMatrix h4(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            h4(r, c) = h_full.matrix()(idx[r], idx[c]);
        }
    }
    // Frame rotating at the qubit frequencies; the photon energy in the
    // sector is a global phase and is removed with it.
    for (int r = 0; r < 4; ++r) {
        h4(r, r) -= mp.omega_r * photon_sector + 0.5 * p0.omega_a * kSzFirst[r] +
                    0.5 * p1.omega_a * kSzSecond[r];
    }

    const ComplexMatrix u4 = expm_i(HermitianOperator(std::move(h4)), t);

    TwoQubitEvolution out;
    out.t = t;
    out.j0_first = j0_first;
    out.j0_second = j0_second;
    out.photon_sector = photon_sector;
    out.block = ComplexMatrix(4, 4);
    const double n_half = photon_sector + 0.5;
    for (int r = 0; r < 4; ++r) {
        const double phase = t * n_half * (j0_first * kSzFirst[r] + j0_second * kSzSecond[r]);
        const Complex undo = std::exp(Complex(0.0, phase));  // conjugate of the prefactor
        for (int c = 0; c < 4; ++c) {
            out.block(r, c) = undo * u4(r, c);
        }
    }
    out.unitarity_residual =
            max_abs(ComplexMatrix(out.block.adjoint() * out.block - ComplexMatrix::Identity(4, 4)));
    return out;
}

std::vector<CouplingRow> coupling_sweep(std::span<const MultiQubitParams> points) {
    if (points.empty()) {
        throw std::invalid_argument("coupling_sweep: empty grid");
    }
    std::vector<CouplingRow> rows;
    rows.reserve(points.size());
    for (const auto& mp : points) {
        CouplingRow row;
        row.g = mp.qubits.empty() ? 0.0 : mp.qubits.front().g;
        try {
            row.j = effective_couplings(mp);
        } catch (const SingularDetuningError& e) {
            row.flag = e.what();
        } catch (const PolicyError& e) {
            row.flag = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CouplingRow> coupling_sweep(const MultiQubitParams& tmpl,
                                        std::span<const double> g_grid) {
    if (g_grid.empty()) {
        throw std::invalid_argument("coupling_sweep: empty grid");
    }
    std::vector<MultiQubitParams> points;
    points.reserve(g_grid.size());
    for (double g : g_grid) {
        MultiQubitParams mp = tmpl;
        for (auto& q : mp.qubits) {
            q.g = g;
        }
        points.push_back(std::move(mp));
    }
    return coupling_sweep(points);
}

double gate_fidelity(const ComplexMatrix& u, const ComplexMatrix& v) {
    if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows() || u.rows() == 0) {
        throw std::invalid_argument("gate_fidelity: need same-size square matrices");
    }
    return std::abs((v.adjoint() * u).trace()) / static_cast<double>(u.rows());
}

ComplexMatrix sqrt_iswap_block() {
    const double c = 1.0 / std::sqrt(2.0);
    const Complex mi(0.0, -1.0);
    ComplexMatrix v = ComplexMatrix::Identity(4, 4);
    v(1, 1) = c;
    v(2, 2) = c;
    v(1, 2) = mi * c;
    v(2, 1) = mi * c;
    return v;
}

}  // namespace irwa
