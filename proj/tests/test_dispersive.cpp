#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "irwa/dispersive.hpp"
#include "irwa/errors.hpp"
#include "irwa/numerics.hpp"
#include "oracles.hpp"

using namespace irwa;

namespace {

const CutoffPolicy kTenDelta = CutoffPolicy::factor_of_detuning(10.0);
const double kInf = std::numeric_limits<double>::infinity();

// Exactly representable operating point: Delta = 0.5, Sigma = 2, and with
// g = 0.25 every coupling formula below evaluates without rounding, so the
// bookkeeping identities can be asserted bitwise.
const SystemParams kExactPoint{0.75, 1.25, 0.25};

}  // namespace

TEST_SUITE("dispersive") {

TEST_CASE("variant couplings") {
    const SystemParams p{1.0, 1.2, 0.1};
    const CouplingPair rwa = couplings_for_variant(DispersiveVariant::RWA, p, kTenDelta);
    CHECK(rwa.g_r == p.g);
    CHECK(rwa.g_ar == 0.0);
    const CouplingPair nr = couplings_for_variant(DispersiveVariant::NonRWA, p, kTenDelta);
    CHECK(nr.g_r == p.g);
    CHECK(nr.g_ar == p.g);
    const CouplingPair ir = couplings_for_variant(DispersiveVariant::IRWA, p, kTenDelta);
    CHECK(ir.g_r < p.g);
    CHECK(ir.g_ar < ir.g_r);
}

TEST_CASE("small parameters and validity") {
    const SystemParams p{1.0, 1.2, 0.1};
    const SmallParams sp = small_params(p, {0.1, 0.05});
    CHECK(sp.lambda == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sp.big_lambda == doctest::Approx(0.05 / 2.2).epsilon(1e-15));
    CHECK_FALSE(sp.valid());

    const SystemParams deep{1.0, 1.5, 0.01};
    CHECK(small_params(deep, {0.01, 0.01}).valid());

    CHECK_THROWS_AS(small_params({1.0, 1.0, 0.1}, {0.1, 0.1}), SingularDetuningError);
}

TEST_CASE("qubit-conditioned shifts at the reference point") {
    // g = 0.05, Delta = 0.5, Sigma = 2.5.
    const SystemParams p{1.0, 1.5, 0.05};
    const DispersiveShifts s = dispersive_shifts(p, CutoffPolicy::fixed(2.0));
    CHECK(s.chi_rwa == doctest::Approx(0.005).epsilon(1e-14));
    CHECK(s.chi_nrwa == doctest::Approx(0.006).epsilon(1e-14));
    CHECK(s.lamb_shift == s.chi_rwa);
    CHECK(s.ac_stark_per_photon == 2.0 * s.chi_rwa);

    const ShiftPair rwa = resonator_shift(p, CutoffPolicy::fixed(2.0), DispersiveVariant::RWA);
    CHECK(rwa.qubit_up == doctest::Approx(1.005).epsilon(1e-14));
    CHECK(rwa.qubit_down == doctest::Approx(0.995).epsilon(1e-14));
    const ShiftPair nr = resonator_shift(p, CutoffPolicy::fixed(2.0), DispersiveVariant::NonRWA);
    CHECK(nr.qubit_up == doctest::Approx(1.006).epsilon(1e-14));
}

TEST_CASE("averaged shift at the detuning-tracking reference point") {
    // g = 0.1, Delta = 1 (omega_a = 2), omega_k = 10 |Delta|.
    const SystemParams p{1.0, 2.0, 0.1};
    const DispersiveShifts s = dispersive_shifts(p, kTenDelta);
    CHECK(s.chi_rwa == doctest::Approx(0.01).epsilon(1e-14));
    CHECK(s.chi_irwa == doctest::Approx(0.012946935621729109).epsilon(1e-12));
    CHECK(s.chi_irwa > s.chi_rwa);
    CHECK(s.chi_irwa < s.chi_nrwa);
}

TEST_CASE("shift consistency identities") {
    const SystemParams p{1.0, 1.7, 0.08};
    const DispersiveShifts s = dispersive_shifts(p, CutoffPolicy::fixed(1.0));
    CHECK(dispersive_chi(p, {p.g, 0.0}) == s.chi_rwa);
    CHECK(dispersive_chi(p, {p.g, p.g}) == s.chi_nrwa);

    // An unbounded averaging width turns the averaged shift into the
    // full-strength one, bitwise.
    const DispersiveShifts wide = dispersive_shifts(p, CutoffPolicy::fixed(kInf));
    CHECK(wide.chi_irwa == wide.chi_nrwa);
}

TEST_CASE("no qubit, no full-strength shift") {
    const SystemParams p{1.0, 0.0, 0.1};
    const DispersiveShifts s = dispersive_shifts(p, CutoffPolicy::fixed(1.0));
    CHECK(s.chi_nrwa == 0.0);
    CHECK(s.chi_rwa == doctest::Approx(-0.01).epsilon(1e-14));
    CHECK(s.chi_rwa != 0.0);
}

TEST_CASE("every effective single-qubit model is QND in sigma_z") {
    const SystemParams p{1.0, 1.4, 0.05};
    const CompositeSpace space{1, FockSpace{6}};
    const ComplexMatrix sz = embed(pauli(Pauli::Z), 0, space);
    for (DispersiveVariant v :
         {DispersiveVariant::RWA, DispersiveVariant::NonRWA, DispersiveVariant::IRWA}) {
        const ComplexMatrix h = effective_hamiltonian_1q(p, kTenDelta, v, space).matrix();
        CHECK(max_abs(ComplexMatrix(h * sz - sz * h)) == 0.0);
    }
    // The averaged model carries a two-photon term; make sure it is there.
    const ComplexMatrix h_ir =
            effective_hamiltonian_1q(p, kTenDelta, DispersiveVariant::IRWA, space).matrix();
    const std::array<int, 1> e_state{0};
    const Complex two_photon = basis_state(space, e_state, 2)
                                       .dot(h_ir * basis_state(space, e_state, 0));
    CHECK(std::abs(two_photon) > 1e-6);
}

TEST_CASE("exact shift matches the dressed-level closed form for the co-rotating kind") {
    for (double omega_a : {1.2, 0.8, 1.35}) {
        const SystemParams p{1.0, omega_a, 0.02};
        const ExactShift oracle = exact_shift_oracle(p, ModelKind::JC, kTenDelta);
        const double closed = testing::jc_chi_closed_form(p, p.g);
        CHECK(std::abs(oracle.chi - closed) <= 1e-7);
        CHECK_FALSE(oracle.tie);
    }
}

TEST_CASE("second-order shifts track the exact spectrum in the dispersive regime") {
    const SystemParams p{1.0, 1.2, 0.02};
    const DispersiveShifts s = dispersive_shifts(p, kTenDelta);
    const ExactShift qrm = exact_shift_oracle(p, ModelKind::Rabi, kTenDelta);
    CHECK(std::abs(qrm.chi - s.chi_nrwa) <= 0.10 * std::abs(s.chi_nrwa));
    const ExactShift jc = exact_shift_oracle(p, ModelKind::JC, kTenDelta);
    CHECK(std::abs(jc.chi - s.chi_rwa) <= 0.05 * std::abs(s.chi_rwa));
}

TEST_CASE("shifts vanish with the coupling") {
    for (double g : {1e-3, 1e-4}) {
        const SystemParams p{1.0, 1.5, g};
        const DispersiveShifts s = dispersive_shifts(p, CutoffPolicy::fixed(1.0));
        CHECK(std::abs(s.chi_rwa) < 3.0 * g * g);
        CHECK(std::abs(s.chi_nrwa) < 3.0 * g * g);
        CHECK(std::abs(s.chi_irwa) < 3.0 * g * g);
    }
}

TEST_CASE("interqubit coupling structure per variant") {
    const SystemParams p = kExactPoint;
    const MultiQubitParams mp = MultiQubitParams::equal_qubits(p, 2, CutoffPolicy::fixed(2.0));
    const EffectiveCouplings j = effective_couplings(mp);

    // Exact arithmetic at this point: Delta = 0.5, Sigma = 2, g^2 = 0.0625.
    CHECK(j.j_r == 0.125);
    CHECK(j.j_nr0 == 0.15625);
    CHECK(j.j_nr1 == 0.09375);

    // Flip-flop only for the co-rotating variant; Ising structure at full
    // strength: both channels carry the same coefficient.
    const EffectiveCouplings rwa = effective_couplings(p, {p.g, 0.0}, p, {p.g, 0.0});
    CHECK(rwa.j_ir1 == 2.0 * rwa.j_r);
    CHECK(rwa.j_ir2 == 0.0);
    const EffectiveCouplings ising = effective_couplings(p, {p.g, p.g}, p, {p.g, p.g});
    CHECK(ising.j_ir1 == ising.j_ir2);
    CHECK(ising.j_ir1 == 2.0 * ising.j_nr1);
    CHECK(ising.j_ir0 == ising.j_nr0);
}

TEST_CASE("averaged interqubit couplings interpolate between the limits") {
    // Small coupling with a width tied to the detuning: the counter-rotating
    // channel is switched off, so the flip-flop coupling approaches the
    // co-rotating value and the double-flip channel nearly vanishes.
    const SystemParams small{1.0, 1.05, 0.005};
    const MultiQubitParams mp_small = MultiQubitParams::equal_qubits(small, 2, kTenDelta);
    const EffectiveCouplings j_small = effective_couplings(mp_small);
    CHECK(std::abs(j_small.j_ir2) <= 0.05 * std::abs(j_small.j_ir1));
    CHECK(std::abs(j_small.j_ir1 - 2.0 * j_small.j_r) <= 0.05 * std::abs(2.0 * j_small.j_r));

    // Strong coupling at large width: the full-strength values return.
    const SystemParams big{1.0, 2.0, 0.1};
    const MultiQubitParams mp_big = MultiQubitParams::equal_qubits(big, 2, kTenDelta);
    const EffectiveCouplings j_big = effective_couplings(mp_big);
    CHECK(std::abs(j_big.j_ir1 - 2.0 * j_big.j_nr1) <= 0.10 * std::abs(2.0 * j_big.j_nr1));
}

TEST_CASE("two-qubit effective Hamiltonian: structure and reductions") {
    const SystemParams p{1.0, 1.4, 0.02};
    const MultiQubitParams mp = MultiQubitParams::equal_qubits(p, 2, kTenDelta);
    const CompositeSpace space{2, FockSpace{3}};

    const HermitianOperator h_ir =
            effective_hamiltonian_2q(mp, DispersiveVariant::IRWA, space);
    CHECK(max_abs(ComplexMatrix(h_ir.matrix() - h_ir.matrix().adjoint())) <= 1e-12);

    // The flip-flop matrix element carries half the stored coupling.
    const EffectiveCouplings j = effective_couplings(mp);
    const std::vector<CouplingPair> cps = variant_couplings(mp, DispersiveVariant::IRWA);
    const std::array<int, 2> eg{0, 1};
    const std::array<int, 2> ge{1, 0};
    const Complex flip = basis_state(space, eg, 1).dot(h_ir.matrix() * basis_state(space, ge, 1));
    CHECK(std::real(flip) == doctest::Approx(0.5 * j.j_ir1).epsilon(1e-12));

    // Setting the counter-rotating couplings to zero removes the double-flip
    // channel entirely, leaving the co-rotating structure.
    std::vector<CouplingPair> stripped = cps;
    for (auto& c : stripped) c.g_ar = 0.0;
    const ComplexMatrix h_stripped = effective_hamiltonian_2q_with(mp, stripped, space).matrix();
    const std::array<int, 2> ee{0, 0};
    const std::array<int, 2> gg{1, 1};
    CHECK(std::abs(basis_state(space, ee, 1)
                           .dot(h_stripped * basis_state(space, gg, 1))) == 0.0);
    const ComplexMatrix h_full = effective_hamiltonian_2q_with(mp, cps, space).matrix();
    CHECK(std::abs(basis_state(space, ee, 1).dot(h_full * basis_state(space, gg, 1))) > 0.0);
    // With the channel removed the flip-flop element reduces to the
    // co-rotating coefficient g_r^2 (1/Delta_j + 1/Delta_k) / 2.
    const Complex flip_stripped =
            basis_state(space, eg, 1).dot(h_stripped * basis_state(space, ge, 1));
    const EffectiveCouplings j_stripped =
            effective_couplings(p, stripped[0], p, stripped[1]);
    CHECK(std::real(flip_stripped) == doctest::Approx(0.5 * j_stripped.j_ir1).epsilon(1e-12));
}

TEST_CASE("two-qubit evolution basics") {
    const SystemParams p{1.0, 1.2, 0.02};
    const MultiQubitParams mp = MultiQubitParams::equal_qubits(p, 2, kTenDelta);

    const TwoQubitEvolution start = evolution_2q(mp, DispersiveVariant::IRWA, 0.0);
    CHECK(max_abs(ComplexMatrix(start.block - ComplexMatrix::Identity(4, 4))) <= 1e-14);
    CHECK(start.unitarity_residual <= 1e-10);

    const TwoQubitEvolution later = evolution_2q(mp, DispersiveVariant::IRWA, 35.0, 2);
    CHECK(later.unitarity_residual <= 1e-10);
    CHECK(later.photon_sector == 2);
    CHECK(later.j0_first == doctest::Approx(later.j0_second).epsilon(1e-15));

    CHECK_THROWS_AS(evolution_2q(mp, DispersiveVariant::IRWA, 1.0, -1),
                    std::invalid_argument);
    const MultiQubitParams three = MultiQubitParams::equal_qubits(p, 3, kTenDelta);
    CHECK_THROWS_AS(evolution_2q(three, DispersiveVariant::IRWA, 1.0),
                    std::invalid_argument);
}

TEST_CASE("co-rotating evolution reaches the root-of-iSWAP block") {
    const SystemParams p{1.0, 1.2, 0.02};
    const MultiQubitParams mp = MultiQubitParams::equal_qubits(p, 2, kTenDelta);
    const double t = std::numbers::pi * p.delta() / (4.0 * p.g * p.g);
    const TwoQubitEvolution ev = evolution_2q(mp, DispersiveVariant::RWA, t);
    CHECK(gate_fidelity(ev.block, sqrt_iswap_block()) >= 1.0 - 1e-10);

    // |eg> acquires equal weight on |ge> with the quarter phase.
    CHECK(std::abs(ev.block(1, 1)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(std::abs(ev.block(2, 1)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("the two root branches differ by local z rotations") {
    // Conjugating by equal z phase frames maps the generated branch
    // (-i off-diagonals) onto the +i branch.
    const ComplexMatrix mine = sqrt_iswap_block();
    ComplexMatrix plus = ComplexMatrix::Identity(4, 4);
    plus(1, 1) = 1.0 / std::sqrt(2.0);
    plus(2, 2) = 1.0 / std::sqrt(2.0);
    plus(1, 2) = Complex(0.0, +1.0 / std::sqrt(2.0));
    plus(2, 1) = Complex(0.0, +1.0 / std::sqrt(2.0));

    // Opposite quarter z rotations on the two qubits:
    // P = exp(i pi/4 sz_1) exp(-i pi/4 sz_2) = diag(1, i, -i, 1).
    ComplexMatrix rot = ComplexMatrix::Zero(4, 4);
    rot(0, 0) = 1.0;
    rot(1, 1) = Complex(0.0, +1.0);
    rot(2, 2) = Complex(0.0, -1.0);
    rot(3, 3) = 1.0;
    CHECK(max_abs(ComplexMatrix(rot * mine * rot.adjoint() - plus)) <= 1e-12);
    CHECK(gate_fidelity(mine, mine) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("full-strength evolution opens the double-flip corner") {
    const SystemParams p{1.0, 1.2, 0.02};
    const MultiQubitParams mp = MultiQubitParams::equal_qubits(p, 2, kTenDelta);
    const TwoQubitEvolution ev = evolution_2q(mp, DispersiveVariant::NonRWA, 40.0);
    CHECK(std::abs(ev.block(0, 3)) > 0.0);
    CHECK(std::abs(ev.block(3, 0)) > 0.0);
    const TwoQubitEvolution rwa = evolution_2q(mp, DispersiveVariant::RWA, 40.0);
    CHECK(std::abs(rwa.block(0, 3)) <= 1e-12);
}

TEST_CASE("effective evolution tracks the full time-averaged model") {
    // lambda = g_r/Delta close to 0.05 with Delta = 0.4.
    const SystemParams p{1.0, 1.4, 0.02};
    const CutoffPolicy policy = CutoffPolicy::fixed(4.0);
    const MultiQubitParams mp = MultiQubitParams::equal_qubits(p, 2, policy);
    const CouplingPair c = averaged_couplings(p, policy);
    CHECK(std::abs(c.g_r / p.delta() - 0.05) < 0.002);

    const EffectiveCouplings j = effective_couplings(mp);
    const double t_gate = std::numbers::pi / (4.0 * j.j_ir1);

    const CompositeSpace space{2, FockSpace{8}};
    const HermitianOperator h_full = build_multiqubit(ModelKind::IRWA, mp, space);
    const HermitianOperator h_eff =
            effective_hamiltonian_2q(mp, DispersiveVariant::IRWA, space);
    const std::array<int, 2> eg{0, 1};
    const ComplexVector psi0 = basis_state(space, eg, 0);
    for (double t : {0.25 * t_gate, t_gate}) {
        const ComplexVector full = expm_i(h_full, t) * psi0;
        const ComplexVector eff = expm_i(h_eff, t) * psi0;
        const double fidelity = std::norm(Complex(full.dot(eff)));
        CHECK(fidelity > 0.99);
    }
}

TEST_CASE("coupling sweep flags undefined rows and keeps going") {
    const SystemParams p{1.0, 1.4, 0.02};
    MultiQubitParams tmpl = MultiQubitParams::equal_qubits(p, 2, CutoffPolicy::fixed(2.0));
    tmpl.qubits[0].omega_a = 1.0;  // resonant first qubit: singular detuning
    const std::vector<double> grid{0.01, 0.02};
    const std::vector<CouplingRow> rows = coupling_sweep(tmpl, grid);
    REQUIRE(rows.size() == 2);
    CHECK_FALSE(rows[0].flag.empty());
    CHECK_FALSE(rows[1].flag.empty());

    const MultiQubitParams clean = MultiQubitParams::equal_qubits(p, 2, CutoffPolicy::fixed(2.0));
    const std::vector<CouplingRow> ok = coupling_sweep(clean, grid);
    CHECK(ok[0].flag.empty());
    CHECK(ok[0].j.j_r > 0.0);
    CHECK(ok[1].g == 0.02);
}

}  // TEST_SUITE
