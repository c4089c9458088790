#pragma once

#include <compare>
#include <string>
#include <vector>

#include "irwa/averaging.hpp"

namespace irwa {

// Label of a time-averaged JC eigenstate: the uncoupled ground |g,0> or a
// dressed doublet mixing |e,n> and |g,n+1>. Doublet n carries sqrt(n+1) in
// its splitting; the off-by-one between the photon index and the doublet
// index is the main hazard here.
struct DressedLabel {
    enum class Kind { Ground, Doublet };
    Kind kind = Kind::Ground;
    int n = 0;     // doublet index, >= 0
    int sign = 0;  // +1 or -1 for doublets, 0 for ground

    static DressedLabel ground() { return {}; }
    static DressedLabel doublet(int n, int sign);

    bool is_ground() const { return kind == Kind::Ground; }
    std::string str() const;  // "ground", "0+", "0-", "1+", ...
    friend bool operator==(const DressedLabel&, const DressedLabel&) = default;
};

// Mixing angle of doublet n: theta_n = atan2(2 g_r sqrt(n+1), Delta), in
// [0, pi) for g_r > 0 (exactly pi/2 on resonance). The eigenstate
// amplitudes carry the half angle: c() = cos(theta/2) and s() = sin(theta/2)
// are the weights of |e,n> and |g,n+1> in the upper dressed state.
struct DressedAngle {
    int n;
    double theta;
    double c() const;
    double s() const;
};

DressedAngle dressed_angle(int n, const SystemParams& p, double g_r);

// Zeroth-order (time-averaged JC) energy of a labelled level:
//   E_ground = -omega_a/2,
//   E_{n,pm} = (n + 1/2) omega_r pm (1/2) sqrt(Delta^2 + 4 g_r^2 (n+1)).
double jc_level(const DressedLabel& label, const SystemParams& p, const CouplingPair& couplings);

// Second-order energy correction from the counter-rotating perturbation
// g_ar Y_+ on top of the time-averaged JC eigenbasis. The first-order
// correction vanishes identically for every level. Four label classes
// (ground, doublet 0, doublet 1, doublet n >= 2) have distinct closed
// forms; all denominators are zeroth-order gaps between levels two
// excitations apart. Throws DegeneracyError when a denominator falls
// below 1e-9 (non-degenerate theory inapplicable).
double second_order(const DressedLabel& label, const SystemParams& p,
                    const CouplingPair& couplings);

struct PerturbedLevel {
    DressedLabel label;
    double e0;
    double e2;
    double total() const { return e0 + e2; }
};

// True when the near-resonance premise |Delta| <= threshold * omega_r holds.
bool near_resonance(const SystemParams& p, double threshold = 0.1);

// The k lowest levels with second-order corrections, ordered by total
// energy. Couplings are the time-averaged pair resolved from the policy.
std::vector<PerturbedLevel> perturbed_spectrum(const SystemParams& p, const CutoffPolicy& policy,
                                               int k_levels);

}  // namespace irwa
