#include "irwa/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "irwa/errors.hpp"
#include "irwa/numerics.hpp"
#include "irwa/parallel.hpp"
#include "irwa/quantize.hpp"

namespace irwa {

ConvergedSpectrum converged_spectrum(const std::function<HermitianOperator(int)>& builder,
                                     int k_levels, double tol, const ConvergenceOptions& opts) {
    if (k_levels < 1) {
        throw std::invalid_argument("converged_spectrum: k_levels must be at least 1");
    }
    if (!(tol > 0)) {
        throw std::invalid_argument("converged_spectrum: tolerance must be positive");
    }
    if (opts.start < 1 || opts.step < 1 || opts.cap < opts.start) {
        throw std::invalid_argument("converged_spectrum: need start >= 1, step >= 1, cap >= start");
    }

    int n = opts.start;
    EigenSystem prev = eig_hermitian(builder(n));
    if (prev.values.size() < k_levels) {
        std::ostringstream msg;
        msg << "converged_spectrum: builder(" << n << ") has only " << prev.values.size()
            << " levels, need " << k_levels;
        throw std::invalid_argument(msg.str());
    }

    double delta = 0;
    while (n + opts.step <= opts.cap) {
        EigenSystem next = eig_hermitian(builder(n + opts.step));
        delta = 0;
        for (int i = 0; i < k_levels; ++i) {
            delta = std::max(delta, std::abs(next.values[i] - prev.values[i]));
        }
        if (delta < tol) {
            return ConvergedSpectrum{std::move(prev), n, delta};
        }
        prev = std::move(next);
        n += opts.step;
    }

    std::ostringstream msg;
    msg << "spectrum not converged at cutoff " << n << " (last level change " << delta
        << ", tolerance " << tol << ")";
    throw ConvergenceError(msg.str(), n, delta);
}

namespace {

// Analytic level list used to seed the tracker: candidate labels with their
// co-rotating-model energies, sorted ascending with a fixed label order as
// tiebreak so degenerate seeds stay deterministic.
std::vector<std::pair<double, DressedLabel>> analytic_levels(
        const std::vector<DressedLabel>& cands, const SystemParams& p, const CouplingPair& cp) {
    std::vector<std::pair<double, DressedLabel>> out;
    out.reserve(cands.size());
    for (const auto& l : cands) {
        out.emplace_back(jc_level(l, p, cp), l);
    }
    std::vector<int> idx(out.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (out[a].first != out[b].first) {
            return out[a].first < out[b].first;
        }
        return a < b;
    });
    std::vector<std::pair<double, DressedLabel>> sorted;
    sorted.reserve(out.size());
    for (int i : idx) {
        sorted.push_back(out[i]);
    }
    return sorted;
}

}  // namespace

TrackedSpectrum track_levels(std::span<const SystemParams> sweep, ModelKind kind,
                             const CutoffPolicy& policy, int k_levels, const TrackOptions& opts) {
    if (sweep.empty()) {
        throw std::invalid_argument("track_levels: sweep is empty");
    }
    if (k_levels < 1) {
        throw std::invalid_argument("track_levels: k_levels must be at least 1");
    }
    const int n_points = static_cast<int>(sweep.size());

    bool ascending = true, descending = true;
    for (int i = 0; i + 1 < n_points; ++i) {
        if (sweep[i + 1].g < sweep[i].g) {
            ascending = false;
        }
        if (sweep[i + 1].g > sweep[i].g) {
            descending = false;
        }
    }
    if (!ascending && !descending) {
        throw std::invalid_argument("track_levels: sweep must be monotone in g");
    }
    const bool reversed = !ascending;

    std::vector<SystemParams> pts(sweep.begin(), sweep.end());
    if (reversed) {
        std::reverse(pts.begin(), pts.end());
    }

    int n_max = opts.n_max;
    if (n_max <= 0) {
        const SystemParams& p_top = pts.back();
        auto builder = [&](int n) {
            return build_hamiltonian(kind, p_top, policy, CompositeSpace{1, FockSpace{n}});
        };
        n_max = converged_spectrum(builder, k_levels, opts.tol).n_max;
    }
    const CompositeSpace space{1, FockSpace{n_max}};
    const int dim = static_cast<int>(space.dim());
    if (k_levels > dim) {
        throw std::invalid_argument("track_levels: k_levels exceeds the Hilbert space dimension");
    }

    // Diagonalize every sweep point, keeping all eigenvalues but only the
    // low-lying eigenvectors needed for overlap matching.
    const int kept = std::min(dim, k_levels + 6);
    std::vector<RealVector> values(static_cast<std::size_t>(n_points));
    std::vector<ComplexMatrix> vectors(static_cast<std::size_t>(n_points));
    parallel_for_index(n_points, opts.threads, [&](int i) {
        EigenSystem es = eig_hermitian(build_hamiltonian(kind, pts[static_cast<std::size_t>(i)],
                                                         policy, space));
        values[static_cast<std::size_t>(i)] = std::move(es.values);
        vectors[static_cast<std::size_t>(i)] = es.vectors.leftCols(kept);
    });

    // Seed at the first point whose analytic levels separate all k tracked
    // slots; a fully degenerate sweep falls back to plain rank order.
    std::vector<DressedLabel> cands;
    cands.push_back(DressedLabel::ground());
    for (int n = 0; n <= k_levels + 2; ++n) {
        cands.push_back(DressedLabel::doublet(n, -1));
        cands.push_back(DressedLabel::doublet(n, +1));
    }
    int seed = 0;
    std::vector<std::pair<double, DressedLabel>> seed_levels =
            analytic_levels(cands, pts[0], couplings_for(kind, pts[0], policy));
    for (int s = 0; s < n_points; ++s) {
        auto lv = analytic_levels(cands, pts[static_cast<std::size_t>(s)],
                                  couplings_for(kind, pts[static_cast<std::size_t>(s)], policy));
        bool separated = true;
        for (int i = 0; i < k_levels; ++i) {
            if (lv[static_cast<std::size_t>(i + 1)].first - lv[static_cast<std::size_t>(i)].first <=
                1e-9) {
                separated = false;
                break;
            }
        }
        if (separated) {
            seed = s;
            seed_levels = lv;
            break;
        }
    }

    // assign[p][i] = eigenindex of tracked level i at point p
    std::vector<std::vector<int>> assign(static_cast<std::size_t>(n_points),
                                         std::vector<int>(static_cast<std::size_t>(k_levels)));
    for (int i = 0; i < k_levels; ++i) {
        assign[static_cast<std::size_t>(seed)][static_cast<std::size_t>(i)] = i;
    }

    std::vector<int> tie_points;
    constexpr double kTieGap = 1e-6;
    constexpr double kMinOverlap = 0.25;

    // One tracking step: given the assignment at `from`, pick eigenindices at
    // `to` by eigenvector overlap. Levels are processed lowest-energy-first so
    // that an overlap tie resolves to the lower eigenindex.
    auto step = [&](int from, int to) {
        const auto& cur = assign[static_cast<std::size_t>(from)];
        auto& nxt = assign[static_cast<std::size_t>(to)];
        const ComplexMatrix overlap =
                vectors[static_cast<std::size_t>(to)].adjoint() * vectors[static_cast<std::size_t>(from)];

        std::vector<int> order(static_cast<std::size_t>(k_levels));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const double ea = values[static_cast<std::size_t>(from)][cur[static_cast<std::size_t>(a)]];
            const double eb = values[static_cast<std::size_t>(from)][cur[static_cast<std::size_t>(b)]];
            if (ea != eb) {
                return ea < eb;
            }
            return cur[static_cast<std::size_t>(a)] < cur[static_cast<std::size_t>(b)];
        });

        std::vector<bool> claimed(static_cast<std::size_t>(kept), false);
        bool tied = false;
        for (int i : order) {
            double best = -1;
            for (int c = 0; c < kept; ++c) {
                if (claimed[static_cast<std::size_t>(c)]) {
                    continue;
                }
                best = std::max(best, std::abs(overlap(c, cur[static_cast<std::size_t>(i)])));
            }
            if (best < kMinOverlap) {
                std::ostringstream msg;
                msg << "lost level " << i << " between g = "
                    << pts[static_cast<std::size_t>(from)].g << " and g = "
                    << pts[static_cast<std::size_t>(to)].g << " (best overlap " << best
                    << "); refine the sweep";
                throw TrackingError(msg.str());
            }
            int pick = -1;
            int near_best = 0;
            for (int c = 0; c < kept; ++c) {
                if (claimed[static_cast<std::size_t>(c)]) {
                    continue;
                }
                if (best - std::abs(overlap(c, cur[static_cast<std::size_t>(i)])) < kTieGap) {
                    ++near_best;
                    if (pick < 0) {
                        pick = c;  // lowest eigenindex among the tied set
                    }
                }
            }
            if (near_best > 1) {
                tied = true;
            }
            claimed[static_cast<std::size_t>(pick)] = true;
            nxt[static_cast<std::size_t>(i)] = pick;
        }
        if (tied) {
            tie_points.push_back(to);
        }
    };

    for (int p = seed; p + 1 < n_points; ++p) {
        step(p, p + 1);
    }
    for (int p = seed; p > 0; --p) {
        step(p, p - 1);
    }

    TrackedSpectrum out;
    out.n_max = n_max;
    out.sweep_g.reserve(static_cast<std::size_t>(n_points));
    for (const auto& p : sweep) {
        out.sweep_g.push_back(p.g);
    }
    out.levels.reserve(static_cast<std::size_t>(k_levels));
    for (int i = 0; i < k_levels; ++i) {
        TrackedLevel lvl;
        lvl.label = seed_levels[static_cast<std::size_t>(i)].second;
        lvl.energies.resize(static_cast<std::size_t>(n_points));
        for (int p = 0; p < n_points; ++p) {
            const int src = reversed ? (n_points - 1 - p) : p;
            lvl.energies[static_cast<std::size_t>(p)] =
                    values[static_cast<std::size_t>(src)]
                          [assign[static_cast<std::size_t>(src)][static_cast<std::size_t>(i)]];
        }
        out.levels.push_back(std::move(lvl));
    }
    if (reversed) {
        for (int& p : tie_points) {
            p = n_points - 1 - p;
        }
    }
    std::sort(tie_points.begin(), tie_points.end());
    tie_points.erase(std::unique(tie_points.begin(), tie_points.end()), tie_points.end());
    out.tie_points = std::move(tie_points);
    return out;
}

}  // namespace irwa
