#pragma once

#include <stdexcept>
#include <string>

namespace irwa {

// Thrown when the dense eigensolver fails to converge.
struct EigensolverError : std::runtime_error {
    explicit EigensolverError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a cutoff policy cannot be resolved at the given parameters
// (e.g. width proportional to a detuning that is zero).
struct PolicyError : std::runtime_error {
    explicit PolicyError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when the truncation loop hits its Fock-space cap without the
// requested levels settling.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, int n_max, double last_delta)
        : std::runtime_error(what), n_max(n_max), last_delta(last_delta) {}
    int n_max;
    double last_delta;
};

// Thrown when non-degenerate perturbation theory meets a (near-)vanishing
// energy denominator.
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when adiabatic level tracking cannot produce a consistent
// assignment between consecutive eigenvector sets.
struct TrackingError : std::runtime_error {
    explicit TrackingError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by dispersive-model constructions at zero detuning.
struct SingularDetuningError : std::runtime_error {
    explicit SingularDetuningError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace irwa
