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

#ifndef QRACD_OPTIMIZE_HPP
#define QRACD_OPTIMIZE_HPP

// Derivative-free minimizers: golden-section line search and Nelder-Mead.
// Both are deterministic.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qracd {

/// Thrown when an iterative method hits its iteration cap.
class ConvergenceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct LineMinimum {
    double x;
    double value;
    int evaluations;
};

/// Golden-section minimization of f on [lo, hi], stopping once the bracket is
/// narrower than tol. Returns the best point seen, including the endpoints.
template <typename F>
LineMinimum golden_section_minimize(F &&f, double lo, double hi, double tol, int max_iterations = 200) {
    constexpr double kInvPhi = 0.61803398874989484820;
    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int evals = 2;
    LineMinimum best = fc <= fd ? LineMinimum{c, fc, 0} : LineMinimum{d, fd, 0};
    for (int it = 0; std::abs(b - a) > tol; ++it) {
        if (it >= max_iterations) {
            throw ConvergenceError("golden_section_minimize: iteration cap reached");
        }
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
            if (fc < best.value) {
                best = {c, fc, 0};
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
            if (fd < best.value) {
                best = {d, fd, 0};
            }
        }
        ++evals;
    }
    for (double x : {lo, hi}) {
        const double fx = f(x);
        ++evals;
        if (fx < best.value) {
            best = {x, fx, 0};
        }
    }
    best.evaluations = evals;
    return best;
}

struct NelderMeadSettings {
    double initial_step = 1e-2;
    double f_tol = 1e-15;
    double x_tol = 1e-11;
    int max_evaluations = 20000;
};

template <std::size_t N>
struct SimplexMinimum {
    std::array<double, N> x;
    double value;
    int evaluations;
};

/// Nelder-Mead with standard coefficients (1, 2, 1/2, 1/2). The initial
/// simplex is start plus initial_step along each axis. Stops on the
/// evaluation cap without throwing; callers decide whether that is an error.
template <std::size_t N, typename F>
SimplexMinimum<N> nelder_mead_minimize(F &&f, const std::array<double, N> &start, const NelderMeadSettings &s) {
    using Point = std::array<double, N>;
    std::array<Point, N + 1> pts;
    std::array<double, N + 1> vals;
    pts[0] = start;
    vals[0] = f(start);
    int evals = 1;
    for (std::size_t i = 0; i < N; ++i) {
        pts[i + 1] = start;
        pts[i + 1][i] += s.initial_step;
        vals[i + 1] = f(pts[i + 1]);
        ++evals;
    }
    std::array<std::size_t, N + 1> order;
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::array<Point, N + 1> p2;
        std::array<double, N + 1> v2;
        for (std::size_t i = 0; i <= N; ++i) {
            p2[i] = pts[order[i]];
            v2[i] = vals[order[i]];
        }
        pts = p2;
        vals = v2;
    };
    auto combine = [](const Point &a, const Point &b, double t) {
        Point out;
        for (std::size_t i = 0; i < N; ++i) {
            out[i] = a[i] + t * (b[i] - a[i]);
        }
        return out;
    };
    sort_simplex();
    while (evals < s.max_evaluations) {
        double size = 0.0;
        for (std::size_t k = 1; k <= N; ++k) {
            for (std::size_t i = 0; i < N; ++i) {
                size = std::max(size, std::abs(pts[k][i] - pts[0][i]));
            }
        }
        if (vals[N] - vals[0] <= s.f_tol && size <= s.x_tol) {
            break;
        }
        Point centroid{};
        for (std::size_t k = 0; k < N; ++k) {
            for (std::size_t i = 0; i < N; ++i) {
                centroid[i] += pts[k][i] / static_cast<double>(N);
            }
        }
        const Point reflected = combine(centroid, pts[N], -1.0);
        const double fr = f(reflected);
        ++evals;
        if (fr < vals[0]) {
            const Point expanded = combine(centroid, pts[N], -2.0);
            const double fe = f(expanded);
            ++evals;
            if (fe < fr) {
                pts[N] = expanded;
                vals[N] = fe;
            } else {
                pts[N] = reflected;
                vals[N] = fr;
            }
        } else if (fr < vals[N - 1]) {
            pts[N] = reflected;
            vals[N] = fr;
        } else {
            const bool outside = fr < vals[N];
            const Point contracted = outside ? combine(centroid, reflected, 0.5) : combine(centroid, pts[N], 0.5);
            const double fc = f(contracted);
            ++evals;
            if (fc < (outside ? fr : vals[N])) {
                pts[N] = contracted;
                vals[N] = fc;
            } else {
                for (std::size_t k = 1; k <= N; ++k) {
                    pts[k] = combine(pts[0], pts[k], 0.5);
                    vals[k] = f(pts[k]);
                    ++evals;
                }
            }
        }
        sort_simplex();
    }
    return {pts[0], vals[0], evals};
}

}  // namespace qracd

#endif  // QRACD_OPTIMIZE_HPP
