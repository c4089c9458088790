#include "irwa/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "irwa/errors.hpp"

namespace irwa {

DressedLabel DressedLabel::doublet(int n, int sign) {
    if (n < 0) throw std::invalid_argument("DressedLabel: doublet index must be >= 0");
    if (sign != 1 && sign != -1) throw std::invalid_argument("DressedLabel: sign must be +1 or -1");
    DressedLabel l;
    l.kind = Kind::Doublet;
    l.n = n;
    l.sign = sign;
    return l;
}

std::string DressedLabel::str() const {
    if (is_ground()) return "ground";
    return std::to_string(n) + (sign > 0 ? "+" : "-");
}

// Dressed-state amplitudes. The eigenvectors of the 2x2 doublet block
// [[Delta/2, g_r sqrt(n+1)], [g_r sqrt(n+1), -Delta/2]] mix with the HALF
// of the rotation angle theta: |n,+> = cos(theta/2)|e,n> + sin(theta/2)|g,n+1>.
// Using cos(theta) here instead breaks the equality with the brute-force
// perturbation sum (see test_perturbation).
double DressedAngle::c() const { return std::cos(0.5 * theta); }
double DressedAngle::s() const { return std::sin(0.5 * theta); }

DressedAngle dressed_angle(int n, const SystemParams& p, double g_r) {
    if (n < 0) throw std::invalid_argument("dressed_angle: n must be >= 0");
    // atan2 keeps theta in [0, pi] for g_r >= 0; pi is reached only in the
    // uncoupled g_r = 0, Delta < 0 limit.
    return {n, std::atan2(2.0 * g_r * std::sqrt(double(n + 1)), p.delta())};
}

double jc_level(const DressedLabel& label, const SystemParams& p, const CouplingPair& couplings) {
    if (label.is_ground()) return -0.5 * p.omega_a;
    const double d = p.delta();
    const double split = std::sqrt(d * d + 4.0 * couplings.g_r * couplings.g_r * (label.n + 1));
    return (label.n + 0.5) * p.omega_r + 0.5 * label.sign * split;
}

namespace {

double checked_gap(double ea, double eb, const DressedLabel& label) {
    const double gap = ea - eb;
    if (std::abs(gap) < 1e-9)
        throw DegeneracyError("second_order: vanishing denominator for level " + label.str());
    return gap;
}

}  // namespace

double second_order(const DressedLabel& label, const SystemParams& p,
                    const CouplingPair& couplings) {
    const double g_ar = couplings.g_ar;
    if (g_ar == 0.0) return 0.0;

    const auto e0 = [&](const DressedLabel& l) { return jc_level(l, p, couplings); };
    const auto angle = [&](int n) { return dressed_angle(n, p, couplings.g_r); };
    const auto up = [](int n) { return DressedLabel::doublet(n, +1); };
    const auto dn = [](int n) { return DressedLabel::doublet(n, -1); };

    if (label.is_ground()) {
        const DressedAngle t1 = angle(1);
        const double e = e0(label);
        return g_ar * g_ar *
               (t1.c() * t1.c() / checked_gap(e, e0(up(1)), label) +
                t1.s() * t1.s() / checked_gap(e, e0(dn(1)), label));
    }

    const int n = label.n;
    const double e = e0(label);
    if (n == 0) {
        const DressedAngle t0 = angle(0);
        const DressedAngle t2 = angle(2);
        const double mix = (label.sign > 0) ? t0.s() : t0.c();
        return 2.0 * g_ar * g_ar * mix * mix *
               (t2.c() * t2.c() / checked_gap(e, e0(up(2)), label) +
                t2.s() * t2.s() / checked_gap(e, e0(dn(2)), label));
    }
    if (n == 1) {
        const DressedAngle t1 = angle(1);
        const DressedAngle t3 = angle(3);
        const double down_mix = (label.sign > 0) ? t1.c() : t1.s();
        const double up_mix = (label.sign > 0) ? t1.s() : t1.c();
        return g_ar * g_ar * down_mix * down_mix /
                   checked_gap(e, e0(DressedLabel::ground()), label) +
               3.0 * g_ar * g_ar * up_mix * up_mix *
                   (t3.c() * t3.c() / checked_gap(e, e0(up(3)), label) +
                    t3.s() * t3.s() / checked_gap(e, e0(dn(3)), label));
    }

    // n >= 2: couples down to doublet n-2 and up to doublet n+2.
    const DressedAngle tn = angle(n);
    const DressedAngle tdown = angle(n - 2);
    const DressedAngle tup = angle(n + 2);
    const double down_mix = (label.sign > 0) ? tn.c() : tn.s();
    const double up_mix = (label.sign > 0) ? tn.s() : tn.c();
    return n * g_ar * g_ar * down_mix * down_mix *
               (tdown.s() * tdown.s() / checked_gap(e, e0(up(n - 2)), label) +
                tdown.c() * tdown.c() / checked_gap(e, e0(dn(n - 2)), label)) +
           (n + 2) * g_ar * g_ar * up_mix * up_mix *
               (tup.c() * tup.c() / checked_gap(e, e0(up(n + 2)), label) +
                tup.s() * tup.s() / checked_gap(e, e0(dn(n + 2)), label));
}

bool near_resonance(const SystemParams& p, double threshold) {
    return std::abs(p.delta()) <= threshold * p.omega_r;
}

std::vector<PerturbedLevel> perturbed_spectrum(const SystemParams& p, const CutoffPolicy& policy,
                                               int k_levels) {
    if (k_levels < 1) throw std::invalid_argument("perturbed_spectrum: k_levels must be >= 1");
    const CouplingPair c = averaged_couplings(p, policy);

    // Candidate labels in zeroth-order energy order; doublet n sits near
    // (n + 1/2) omega_r, so k labels are found within the first k doublets.
    std::vector<DressedLabel> labels{DressedLabel::ground()};
    for (int n = 0; n <= k_levels; ++n) {
        labels.push_back(DressedLabel::doublet(n, -1));
        labels.push_back(DressedLabel::doublet(n, +1));
    }

    std::vector<PerturbedLevel> out;
    out.reserve(labels.size());
    for (const auto& l : labels)
        out.push_back({l, jc_level(l, p, c), second_order(l, p, c)});
    std::sort(out.begin(), out.end(), [](const PerturbedLevel& a, const PerturbedLevel& b) {
        return a.total() < b.total();
    });
    out.resize(size_t(k_levels));
    return out;
}

}  // namespace irwa
