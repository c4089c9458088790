#pragma once

#include <string>

#include "irwa/types.hpp"

namespace irwa {

// Qubit-resonator frequency scales (angular frequencies, units of omega_r
// by default). Detuning Delta = omega_a - omega_r, sum Sigma = omega_a + omega_r.
struct SystemParams {
    double omega_r;
    double omega_a;
    double g;

    SystemParams(double omega_r, double omega_a, double g);
    double delta() const { return omega_a - omega_r; }
    double sigma() const { return omega_a + omega_r; }
};

enum class KernelFamily { Gaussian };

// Time-averaging weight in the frequency domain. For the Gaussian family
// the temporal weight has width tau = 1/omega_k exactly, so the cutoff is
// K(omega) = exp(-omega^2 / (2 omega_k^2)): K(0) = 1, even, nonincreasing
// in |omega|.
struct AveragingKernel {
    KernelFamily family;
    double omega_k;

    AveragingKernel(KernelFamily family, double omega_k);
};

double cutoff(const AveragingKernel& kernel, double omega);

// Time-averaged coupling strengths: g_r = K(Delta) g for the co-rotating
// terms, g_ar = K(Sigma) g for the counter-rotating terms.
struct CouplingPair {
    double g_r;
    double g_ar;
};

// Rule fixing the cutoff width omega_k at a given operating point. The
// width is coupling- or detuning-dependent in the canonical presets
// (omega_k = 10 g, omega_k = 10 |Delta|); "fixed" pins an absolute value.
class CutoffPolicy {
public:
    enum class Mode { FactorOfG, FactorOfDetuning, Fixed };

    static CutoffPolicy factor_of_g(double factor);
    static CutoffPolicy factor_of_detuning(double factor);
    static CutoffPolicy fixed(double omega_k);

    Mode mode() const { return mode_; }
    double value() const { return value_; }

    bool resolvable(const SystemParams& p) const;
    // Resolved cutoff width; throws PolicyError when not resolvable.
    double resolve(const SystemParams& p) const;
    AveragingKernel kernel(const SystemParams& p) const;

    std::string describe() const;

private:
    CutoffPolicy(Mode mode, double value);
    Mode mode_;
    double value_;
};

// (g_r, g_ar) at the operating point. g = 0 yields (0, 0) without touching
// the kernel; otherwise an unresolvable policy throws PolicyError.
CouplingPair averaged_couplings(const SystemParams& p, const CutoffPolicy& policy);

// Diagnostic classification of the frequency-scale separation. Each "<<"
// between dynamical scales is taken as lhs <= ratio_threshold * rhs; the
// placement of the averaging width omega_k against the free frequencies is
// the non-strict ordering written in each chain.
struct RegimeReport {
    double ratio_threshold;
    bool omega_k_resolvable;
    double omega_k;               // 0 when unresolvable
    bool averaging_ok;            // g << omega_k
    bool rwa_chain;               // g << omega_k <= min(omega_r, omega_a)
    bool dispersive_rwa_chain;    // g << |Delta| << omega_k <= Sigma
    bool ultrastrong_chain;       // g << |Delta| <= Sigma <= omega_k
    std::string summary() const;
};

RegimeReport regime_check(const SystemParams& p, const CutoffPolicy& policy,
                          double ratio_threshold = 0.1);

}  // namespace irwa
