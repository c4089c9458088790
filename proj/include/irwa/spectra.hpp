#pragma once

#include <functional>
#include <span>
#include <vector>

#include "irwa/averaging.hpp"
#include "irwa/models.hpp"
#include "irwa/perturbation.hpp"
#include "irwa/types.hpp"

namespace irwa {

// Result of a truncation-convergence run: the spectrum at the first Fock
// cutoff whose continuation changes the requested levels by less than tol.
struct ConvergedSpectrum {
    EigenSystem system;
    int n_max = 0;          // accepted Fock cutoff
    double last_delta = 0;  // max level change between the accepted cutoff and the next
};

struct ConvergenceOptions {
    int start = 20;
    int step = 10;
    int cap = 200;
};

// Diagonalizes builder(n_max) at increasing cutoffs until the lowest k_levels
// eigenvalues move by less than tol between consecutive cutoffs. Returns the
// smaller cutoff of the first converged pair. Throws ConvergenceError if the
// cap is reached without convergence.
ConvergedSpectrum converged_spectrum(const std::function<HermitianOperator(int)>& builder,
                                     int k_levels, double tol,
                                     const ConvergenceOptions& opts = {});

// One adiabatically tracked level: the label it connects to at g = 0 and its
// energy at every sweep point.
struct TrackedLevel {
    DressedLabel label;
    std::vector<double> energies;
};

struct TrackedSpectrum {
    std::vector<double> sweep_g;       // coupling at each point, input order
    std::vector<TrackedLevel> levels;  // k_levels entries, ascending at the seed point
    std::vector<int> tie_points;       // sweep indices where an overlap tie was broken by energy order
    int n_max = 0;                     // Fock cutoff shared by all points
};

struct TrackOptions {
    int n_max = 0;        // 0 = choose by convergence at the largest coupling
    double tol = 1e-8;    // convergence tolerance for the automatic cutoff
    int threads = 1;      // worker threads for the per-point diagonalizations
};

// Follows the k_levels lowest levels of the model across a coupling sweep by
// eigenvector overlap, so that labels stay attached through crossings. The
// sweep must be monotone in g. Ties (overlap gap below 1e-6) are broken by
// energy order and reported in tie_points; a best overlap below 0.25 means
// the sweep is too coarse and raises TrackingError.
TrackedSpectrum track_levels(std::span<const SystemParams> sweep, ModelKind kind,
                             const CutoffPolicy& policy, int k_levels,
                             const TrackOptions& opts = {});

}  // namespace irwa
