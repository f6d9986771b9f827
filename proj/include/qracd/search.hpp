// Copyright 2026 The qracd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRACD_SEARCH_HPP
#define QRACD_SEARCH_HPP

// Searches over encodings: the six-parameter lattice scan for maximal
// geometric discord, local refinement around a lattice winner, a numeric
// witness maximization used to cross-check the closed form, and the
// one-parameter sweeps (planar rotation and measurement angle).
//
// Parameter order is (delta1, delta2, delta3, delta4, phi1, phi2).

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qracd/discord.hpp"
#include "qracd/geodiscord.hpp"
#include "qracd/optimize.hpp"
#include "qracd/qmath.hpp"
#include "qracd/qrac.hpp"

namespace qracd {

using Params = std::array<double, 6>;

inline EncodingSet encoding_from_params(const Params &p) { return encoding_states({p[0], p[1], p[2], p[3]}, {p[4], p[5]}); }

/// 8 D_G, the normalization used in tables (maximum 2/3).
inline double gd8_at(const Params &p) { return 8.0 * geometric_discord(encoding_from_params(p)); }

/// Thrown when a lattice exceeds the cell guard and was not forced.
class GridTooLargeError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Lattice values k * step in [lo, hi), anchored at 0. lo == hi pins the
/// parameter to the single value lo.
struct ParamRange {
    double lo = 0.0;
    double hi = 2.0 * kPi;

    static ParamRange pinned(double v) { return {v, v}; }

    std::vector<double> points(double step) const {
        if (lo == hi) {
            return {lo};
        }
        const auto k_lo = static_cast<long>(std::ceil(lo / step - 1e-9));
        const auto k_hi = static_cast<long>(std::ceil(hi / step - 1e-9));
        std::vector<double> out;
        for (long k = k_lo; k < k_hi; ++k) {
            out.push_back(static_cast<double>(k) * step);
        }
        return out;
    }
};

inline constexpr double kMaxGridCells = 1e9;

/// Lattice values closer than this count as ties and go to the smaller params.
inline constexpr double kGridTieTol = 1e-12;

struct GridSpec {
    double step = kPi / 10.0;
    std::array<ParamRange, 6> ranges{};
    unsigned workers = 1;
    /// Allows lattices above kMaxGridCells.
    bool force = false;
};

struct SearchResult {
    Params params{};
    double gd8 = 0.0;
    double t_max = 0.0;
    std::uint64_t evaluations = 0;
};

namespace detail {

struct Candidate {
    double gd8 = -1.0;
    Params params{};
};

/// Larger gd8 wins; ties within kGridTieTol go to the lexicographically smaller params.
inline bool better(const Candidate &a, const Candidate &b) {
    if (std::abs(a.gd8 - b.gd8) > kGridTieTol) {
        return a.gd8 > b.gd8;
    }
    return a.params < b.params;
}

}  // namespace detail

/// Exhaustive lattice scan. Chunks of the outermost parameter are handed to
/// workers; the reduction order is fixed, so the result does not depend on
/// the worker count.
inline SearchResult grid_search_gd(const GridSpec &spec) {
    if (!(spec.step > 0.0) || !std::isfinite(spec.step)) {
        throw std::invalid_argument("grid_search_gd: step must be positive");
    }
    if (spec.workers < 1) {
        throw std::invalid_argument("grid_search_gd: need at least one worker");
    }
    std::array<std::vector<double>, 6> axis;
    double cells = 1.0;
    for (int i = 0; i < 6; ++i) {
        if (spec.ranges[i].hi < spec.ranges[i].lo) {
            throw std::invalid_argument("grid_search_gd: range upper bound below lower bound");
        }
        axis[i] = spec.ranges[i].points(spec.step);
        if (axis[i].empty()) {
            throw std::invalid_argument("grid_search_gd: empty parameter range");
        }
        cells *= static_cast<double>(axis[i].size());
    }
    if (cells > kMaxGridCells && !spec.force) {
        throw GridTooLargeError("grid_search_gd: lattice has more than 1e9 cells; pass force to run it");
    }

    // Bloch vectors per lattice value: r00(d1), r01(d2), r10(d3, phi1), r11(d4, phi2).
    const std::size_t n1 = axis[0].size(), n2 = axis[1].size(), n3 = axis[2].size(), n4 = axis[3].size(),
                      n5 = axis[4].size(), n6 = axis[5].size();
    std::vector<Vec3> r00(n1), r01(n2), r10(n3 * n5), r11(n4 * n6);
    for (std::size_t i = 0; i < n1; ++i) r00[i] = encoding_bloch_vector(0, axis[0][i], 0.0);
    for (std::size_t i = 0; i < n2; ++i) r01[i] = encoding_bloch_vector(1, axis[1][i], 0.0);
    for (std::size_t i = 0; i < n3; ++i)
        for (std::size_t j = 0; j < n5; ++j) r10[i * n5 + j] = encoding_bloch_vector(2, axis[2][i], axis[4][j]);
    for (std::size_t i = 0; i < n4; ++i)
        for (std::size_t j = 0; j < n6; ++j) r11[i * n6 + j] = encoding_bloch_vector(3, axis[3][i], axis[5][j]);

    std::vector<detail::Candidate> chunk_best(n1);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i1 = next++; i1 < n1; i1 = next++) {
            detail::Candidate best;
            std::array<Vec3, 4> r;
            r[0] = r00[i1];
            for (std::size_t i2 = 0; i2 < n2; ++i2) {
                r[1] = r01[i2];
                for (std::size_t i3 = 0; i3 < n3; ++i3) {
                    for (std::size_t i4 = 0; i4 < n4; ++i4) {
                        for (std::size_t i5 = 0; i5 < n5; ++i5) {
                            r[2] = r10[i3 * n5 + i5];
                            for (std::size_t i6 = 0; i6 < n6; ++i6) {
                                r[3] = r11[i4 * n6 + i6];
                                const double v = 8.0 * geometric_discord(r);
                                // Iteration is lexicographic, so the first of a tie is kept.
                                if (v > best.gd8 + kGridTieTol) {
                                    best.gd8 = v;
                                    best.params = {axis[0][i1], axis[1][i2], axis[2][i3],
                                                   axis[3][i4], axis[4][i5], axis[5][i6]};
                                }
                            }
                        }
                    }
                }
            }
            chunk_best[i1] = best;
        }
    };
    const unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(spec.workers, n1));
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) {
            pool.emplace_back(work);
        }
    }

    detail::Candidate best = chunk_best[0];
    for (std::size_t i = 1; i < n1; ++i) {
        if (detail::better(chunk_best[i], best)) {
            best = chunk_best[i];
        }
    }
    SearchResult out;
    out.params = best.params;
    out.gd8 = best.gd8;
    out.t_max = witness_max_closed(encoding_from_params(best.params)).t_max;
    out.evaluations = static_cast<std::uint64_t>(cells);
    return out;
}

struct RefineSettings {
    /// Each coordinate scans offsets -window..window times fine_step.
    int window = 50;
    int max_cycles = 1000;
    /// Moves must gain more than this; a cycle gaining less ends the scan.
    double improvement_tol = 1e-12;
    /// Restart from a Nelder-Mead simplex when the coordinate scan stalls.
    bool simplex_restarts = true;
};

/// Local ascent of gd8 from start. Cyclic coordinate scans at fine_step;
/// when a full cycle gains nothing, a Nelder-Mead run with edge
/// window * fine_step tries to get past the kink where the two largest
/// eigenvalues of G meet. Only improvements are accepted, so gd8 never
/// decreases and an optimum is returned unchanged.
inline SearchResult refine_local(const Params &start, double fine_step, const RefineSettings &settings = {}) {
    if (!(fine_step > 0.0) || !std::isfinite(fine_step)) {
        throw std::invalid_argument("refine_local: fine_step must be positive");
    }
    if (settings.window < 1) {
        throw std::invalid_argument("refine_local: window must be at least 1");
    }
    Params p = start;
    double f = gd8_at(p);
    std::uint64_t evals = 1;
    for (int cycle = 0;; ++cycle) {
        if (cycle >= settings.max_cycles) {
            throw ConvergenceError("refine_local: cycle cap reached");
        }
        const double f_start = f;
        for (int i = 0; i < 6; ++i) {
            int best_k = 0;
            double best_v = f;
            for (int k = -settings.window; k <= settings.window; ++k) {
                if (k == 0) {
                    continue;
                }
                Params q = p;
                q[i] += k * fine_step;
                const double v = gd8_at(q);
                ++evals;
                if (v > best_v) {
                    best_v = v;
                    best_k = k;
                }
            }
            if (best_v > f + settings.improvement_tol) {
                p[i] += best_k * fine_step;
                f = best_v;
            }
        }
        if (f - f_start >= settings.improvement_tol) {
            continue;
        }
        if (!settings.simplex_restarts) {
            break;
        }
        NelderMeadSettings nm;
        nm.initial_step = settings.window * fine_step;
        const auto res = nelder_mead_minimize([](const Params &q) { return -gd8_at(q); }, p, nm);
        evals += static_cast<std::uint64_t>(res.evaluations);
        if (-res.value > f + settings.improvement_tol) {
            p = res.x;
            f = -res.value;
        } else {
            break;
        }
    }
    SearchResult out;
    out.params = p;
    out.gd8 = f;
    out.t_max = witness_max_closed(encoding_from_params(p)).t_max;
    out.evaluations = evals;
    return out;
}

struct WitnessSearchSettings {
    /// Polar points on [0, pi] and azimuth points on [0, 2pi) per direction.
    int grid = 50;
    double tolerance = 1e-10;
    int max_refine_steps = 10000;
};

/// Maximizes witness_value over both measurement directions by lattice scan
/// plus golden-section refinement. Uses only Born probabilities, so it is an
/// independent check of witness_max_closed.
inline WitnessOptimum witness_max_numeric(const EncodingSet &enc, const WitnessSearchSettings &s = {}) {
    if (s.grid < 2) {
        throw std::invalid_argument("witness_max_numeric: grid needs at least 2 points");
    }
    std::array<double, 2> polar{0.0, kPi / 2.0};
    std::array<double, 2> az{0.0, 0.0};
    auto value = [&](int y, double p, double a) {
        std::array<double, 2> pp = polar;
        std::array<double, 2> aa = az;
        pp[y] = p;
        aa[y] = a;
        return witness_value(enc, MeasurementDirection::from_angles(pp[0], aa[0]),
                             MeasurementDirection::from_angles(pp[1], aa[1]));
    };
    int steps = 0;
    for (int round = 0; round < 2; ++round) {
        for (int y = 0; y < 2; ++y) {
            const double hp0 = kPi / (s.grid - 1);
            const double ha0 = 2.0 * kPi / s.grid;
            double best = value(y, polar[y], az[y]);
            for (int i = 0; i < s.grid; ++i) {
                for (int j = 0; j < s.grid; ++j) {
                    const double v = value(y, i * hp0, j * ha0);
                    if (v > best) {
                        best = v;
                        polar[y] = i * hp0;
                        az[y] = j * ha0;
                    }
                }
            }
            double hp = hp0;
            double ha = ha0;
            while (hp >= s.tolerance || ha >= s.tolerance) {
                if (++steps > s.max_refine_steps) {
                    throw ConvergenceError("witness_max_numeric: refinement step cap reached");
                }
                const double p0 = polar[y];
                const double a0 = az[y];
                const auto lp = golden_section_minimize([&](double p) { return -value(y, p, az[y]); }, polar[y] - hp,
                                                        polar[y] + hp, 0.1 * s.tolerance);
                if (-lp.value > best) {
                    best = -lp.value;
                    polar[y] = lp.x;
                }
                const auto la = golden_section_minimize([&](double a) { return -value(y, polar[y], a); }, az[y] - ha,
                                                        az[y] + ha, 0.1 * s.tolerance);
                if (-la.value > best) {
                    best = -la.value;
                    az[y] = la.x;
                }
                if (std::abs(polar[y] - p0) < 0.25 * hp) hp *= 0.5;
                if (std::abs(az[y] - a0) < 0.25 * ha) ha *= 0.5;
            }
        }
    }
    const auto m0 = MeasurementDirection::from_angles(polar[0], az[0]);
    const auto m1 = MeasurementDirection::from_angles(polar[1], az[1]);
    return {witness_value(enc, m0, m1), m0, m1};
}

struct SweepRecord {
    double delta;
    double qd;
    double gd8;
    double t_minus_2;
};

/// Evenly spaced planar rotations over [from, to], endpoints included.
inline std::vector<SweepRecord> sweep_planar(double from, double to, int steps, const OptimizerSettings &opts = {}) {
    if (steps < 2) {
        throw std::invalid_argument("sweep_planar: need at least 2 steps");
    }
    std::vector<SweepRecord> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double delta = i == steps - 1 ? to : from + (to - from) * i / (steps - 1);
        const EncodingSet enc = planar_rotation(delta);
        out.push_back({delta, quantum_discord(enc, opts).value, 8.0 * geometric_discord(enc),
                       witness_max_closed(enc).t_max - 2.0});
    }
    return out;
}

/// In-plane measurement direction a = (cos theta, 0, sin theta).
inline MeasurementDirection in_plane_direction(double theta) {
    return MeasurementDirection::from_unit({std::cos(theta), 0.0, std::sin(theta)});
}

inline double dtilde_at(const EncodingSet &enc, double theta) { return discord_pre_opt(enc, in_plane_direction(theta)); }

/// Central difference of dtilde_at.
inline double dtilde_derivative(const EncodingSet &enc, double theta, double h = 1e-5) {
    return (dtilde_at(enc, theta + h) - dtilde_at(enc, theta - h)) / (2.0 * h);
}

struct ThetaRecord {
    double theta;
    double dtilde;
    double derivative;
};

inline std::vector<ThetaRecord> sweep_theta(const EncodingSet &enc, double from, double to, int steps,
                                            double fd_step = 1e-5) {
    if (steps < 2) {
        throw std::invalid_argument("sweep_theta: need at least 2 steps");
    }
    std::vector<ThetaRecord> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double theta = i == steps - 1 ? to : from + (to - from) * i / (steps - 1);
        out.push_back({theta, dtilde_at(enc, theta), dtilde_derivative(enc, theta, fd_step)});
    }
    return out;
}

/// Bisection for the zero of the central-difference derivative on [lo, hi].
inline double dtilde_derivative_zero(const EncodingSet &enc, double lo, double hi, double fd_step = 1e-5,
                                     double tol = 1e-10) {
    double flo = dtilde_derivative(enc, lo, fd_step);
    const double fhi = dtilde_derivative(enc, hi, fd_step);
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::invalid_argument("dtilde_derivative_zero: derivative does not change sign on bracket");
    }
    for (int it = 0; hi - lo > tol; ++it) {
        if (it > 200) {
            throw ConvergenceError("dtilde_derivative_zero: iteration cap reached");
        }
        const double mid = 0.5 * (lo + hi);
        const double fm = dtilde_derivative(enc, mid, fd_step);
        if (fm == 0.0) {
            return mid;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace qracd

#endif  // QRACD_SEARCH_HPP
