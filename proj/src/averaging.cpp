#include "irwa/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "irwa/errors.hpp"

namespace irwa {

SystemParams::SystemParams(double omega_r, double omega_a, double g)
    : omega_r(omega_r), omega_a(omega_a), g(g) {
    if (!(omega_r > 0.0)) throw std::invalid_argument("SystemParams: omega_r must be > 0");
    if (omega_a < 0.0) throw std::invalid_argument("SystemParams: omega_a must be >= 0");
    if (g < 0.0) throw std::invalid_argument("SystemParams: g must be >= 0");
}

AveragingKernel::AveragingKernel(KernelFamily family, double omega_k)
    : family(family), omega_k(omega_k) {
    if (!(omega_k > 0.0)) throw std::invalid_argument("AveragingKernel: omega_k must be > 0");
}

double cutoff(const AveragingKernel& kernel, double omega) {
    switch (kernel.family) {
        case KernelFamily::Gaussian: {
            const double x = omega / kernel.omega_k;
            return std::exp(-0.5 * x * x);
        }
    }
    throw std::logic_error("cutoff: unknown kernel family");
}

CutoffPolicy::CutoffPolicy(Mode mode, double value) : mode_(mode), value_(value) {
    if (!(value > 0.0)) throw std::invalid_argument("CutoffPolicy: factor/value must be > 0");
}

CutoffPolicy CutoffPolicy::factor_of_g(double factor) { return {Mode::FactorOfG, factor}; }
CutoffPolicy CutoffPolicy::factor_of_detuning(double factor) {
    return {Mode::FactorOfDetuning, factor};
}
CutoffPolicy CutoffPolicy::fixed(double omega_k) { return {Mode::Fixed, omega_k}; }

bool CutoffPolicy::resolvable(const SystemParams& p) const {
    switch (mode_) {
        case Mode::FactorOfG: return p.g > 0.0;
        case Mode::FactorOfDetuning: return p.delta() != 0.0;
        case Mode::Fixed: return true;
    }
    return false;
}

double CutoffPolicy::resolve(const SystemParams& p) const {
    switch (mode_) {
        case Mode::FactorOfG:
            if (p.g <= 0.0) throw PolicyError("cutoff policy omega_k = c * g needs g > 0");
            return value_ * p.g;
        case Mode::FactorOfDetuning:
            if (p.delta() == 0.0)
                throw PolicyError("cutoff policy omega_k = c * |Delta| needs Delta != 0");
            return value_ * std::abs(p.delta());
        case Mode::Fixed:
            return value_;
    }
    throw std::logic_error("CutoffPolicy: unknown mode");
}

AveragingKernel CutoffPolicy::kernel(const SystemParams& p) const {
    return {KernelFamily::Gaussian, resolve(p)};
}

std::string CutoffPolicy::describe() const {
    switch (mode_) {
        case Mode::FactorOfG: return "factor_of_g:" + std::to_string(value_);
        case Mode::FactorOfDetuning: return "factor_of_detuning:" + std::to_string(value_);
        case Mode::Fixed: return "fixed:" + std::to_string(value_);
    }
    return "?";
}

CouplingPair averaged_couplings(const SystemParams& p, const CutoffPolicy& policy) {
    if (p.g == 0.0) return {0.0, 0.0};
    const AveragingKernel k = policy.kernel(p);
    return {cutoff(k, p.delta()) * p.g, cutoff(k, p.sigma()) * p.g};
}

namespace {
// lhs << rhs at threshold r
bool much_less(double lhs, double rhs, double r) { return lhs <= r * rhs; }
}  // namespace

RegimeReport regime_check(const SystemParams& p, const CutoffPolicy& policy,
                          double ratio_threshold) {
    RegimeReport rep{};
    rep.ratio_threshold = ratio_threshold;
    rep.omega_k_resolvable = policy.resolvable(p);
    rep.omega_k = rep.omega_k_resolvable ? policy.resolve(p) : 0.0;

    if (p.g == 0.0) {
        // Zero coupling separates from every scale.
        rep.averaging_ok = rep.rwa_chain = rep.dispersive_rwa_chain = rep.ultrastrong_chain = true;
        return rep;
    }
    if (!rep.omega_k_resolvable) return rep;

    const double r = ratio_threshold;
    const double wk = rep.omega_k;
    const double ad = std::abs(p.delta());
    const double sum = p.sigma();
    const double wmin = std::min(p.omega_r, p.omega_a);

    rep.averaging_ok = much_less(p.g, wk, r);
    rep.rwa_chain = rep.averaging_ok && wk <= wmin;
    rep.dispersive_rwa_chain =
        much_less(p.g, ad, r) && much_less(ad, wk, r) && wk <= sum;
    rep.ultrastrong_chain = much_less(p.g, ad, r) && ad <= sum && sum <= wk;
    return rep;
}

std::string RegimeReport::summary() const {
    std::string s;
    if (!omega_k_resolvable) return "cutoff width unresolvable at this point";
    s += averaging_ok ? "averaging condition g << omega_k holds"
                      : "averaging condition g << omega_k violated";
    s += "; RWA chain ";
    s += rwa_chain ? "satisfied" : "violated";
    s += "; dispersive-RWA chain ";
    s += dispersive_rwa_chain ? "satisfied" : "violated";
    s += "; ultrastrong chain ";
    s += ultrastrong_chain ? "satisfied" : "violated";
    return s;
}

}  // namespace irwa
