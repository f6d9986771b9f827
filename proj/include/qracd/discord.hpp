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

#ifndef QRACD_DISCORD_HPP
#define QRACD_DISCORD_HPP

// Quantum discord of the classical-quantum state with the projective
// measurement on the qubit side.
//
// For a direction a the register is left in the diagonal state with weights
// w_a^{+-} = (1 +- a.r_a)/8, so the conditional entropy needs only the four
// Bloch vectors. conditional_ensemble_dense computes the same quantities
// from the full 8x8 operator and serves as an independent check.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qracd/optimize.hpp"
#include "qracd/qmath.hpp"
#include "qracd/qrac.hpp"

namespace qracd {

struct ConditionalEnsemble {
    double p_plus;
    double p_minus;
    RealSpectrum spec_plus;
    RealSpectrum spec_minus;
};

namespace detail {

inline RealSpectrum branch_spectrum(const std::array<double, 4> &w, double p) {
    // A zero-probability branch has no conditional state; report it uniform.
    if (!(p > 0.0)) {
        return RealSpectrum({0.25, 0.25, 0.25, 0.25});
    }
    return RealSpectrum({w[0] / p, w[1] / p, w[2] / p, w[3] / p});
}

/// p * S(w / p) = -sum w log2(w / p) for one outcome branch.
inline double branch_entropy(const std::array<double, 4> &w, double p) {
    double h = 0.0;
    if (p > 0.0) {
        for (double v : w) {
            if (v > 0.0) {
                h -= v * std::log2(v / p);
            }
        }
    }
    return h;
}

inline double conditional_entropy_bloch(const std::array<Vec3, 4> &r, const Vec3 &a) {
    std::array<double, 4> wp;
    std::array<double, 4> wm;
    double pp = 0.0;
    double pm = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double c = dot(a, r[k]);
        wp[k] = std::max(0.0, (1.0 + c) / 8.0);
        wm[k] = std::max(0.0, (1.0 - c) / 8.0);
        pp += wp[k];
        pm += wm[k];
    }
    return branch_entropy(wp, pp) + branch_entropy(wm, pm);
}

}  // namespace detail

inline ConditionalEnsemble conditional_ensemble(const EncodingSet &enc, const MeasurementDirection &a) {
    std::array<double, 4> wp;
    std::array<double, 4> wm;
    double pp = 0.0;
    double pm = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double c = dot(a.vec(), enc.bloch(k));
        wp[k] = std::max(0.0, (1.0 + c) / 8.0);
        wm[k] = std::max(0.0, (1.0 - c) / 8.0);
        pp += wp[k];
        pm += wm[k];
    }
    return {pp, pm, detail::branch_spectrum(wp, pp), detail::branch_spectrum(wm, pm)};
}

/// Same ensemble from the dense operator: (I_4 x Pi_pm) rho (I_4 x Pi_pm),
/// traced over the qubit and diagonalized.
inline ConditionalEnsemble conditional_ensemble_dense(const EncodingSet &enc, const MeasurementDirection &a) {
    const ComplexMatrix rho = assemble_cq_state(enc).dense();
    const ComplexMatrix id4 = ComplexMatrix::identity(4);
    std::array<double, 2> p{};
    std::array<RealSpectrum, 2> spec;
    for (int b = 0; b < 2; ++b) {
        const ComplexMatrix proj = kron(id4, a.projector(b == 0 ? +1 : -1));
        const ComplexMatrix post = proj * rho * proj;
        ComplexMatrix reg = partial_trace(post, 4, 2, Subsystem::First);
        p[b] = reg.trace().real();
        if (p[b] > 0.0) {
            reg *= 1.0 / p[b];
            std::vector<double> ev = hermitian_spectrum(reg).values();
            for (double &v : ev) {
                v = std::max(v, 0.0);
            }
            spec[b] = RealSpectrum(std::move(ev));
        } else {
            spec[b] = RealSpectrum({0.25, 0.25, 0.25, 0.25});
        }
    }
    return {p[0], p[1], spec[0], spec[1]};
}

/// sum_k p_k S(rho_register^k), in bits.
inline double conditional_entropy(const EncodingSet &enc, const MeasurementDirection &a) {
    return detail::conditional_entropy_bloch(enc.bloch(), a.vec());
}

/// S(qubit) - S(joint); the measurement-independent part of the discord.
inline double discord_offset(const EncodingSet &enc) {
    return vn_entropy(reduced_qubit(enc)) - vn_entropy(assemble_cq_state(enc).dense());
}

/// Discord before minimization over the measurement direction.
inline double discord_pre_opt(const EncodingSet &enc, const MeasurementDirection &a) {
    return discord_offset(enc) + conditional_entropy(enc, a);
}

/// Register, qubit, and joint entropies combined into I = S_A + S_B - S_AB.
inline double mutual_information(const EncodingSet &enc) {
    const ComplexMatrix rho = assemble_cq_state(enc).dense();
    return vn_entropy(partial_trace(rho, 4, 2, Subsystem::First)) +
           vn_entropy(partial_trace(rho, 4, 2, Subsystem::Second)) - vn_entropy(rho);
}

struct OptimizerSettings {
    /// Polar grid on [0, pi], both poles included.
    int polar_points = 181;
    /// Azimuth grid on [0, pi]; a and -a give the same measurement.
    int azimuth_points = 91;
    /// Refinement stops once both bracket half-widths fall below this.
    double tolerance = 1e-9;
    /// Cap on golden-section line searches during refinement.
    int max_refine_steps = 10000;
};

struct DiscordResult {
    double value;
    MeasurementDirection argmin;
    double polar;
    double azimuth;
    /// Minimum of the conditional entropy, sum_k p_k S(rho^k).
    double min_conditional_entropy;
    long evaluations;
};

/// Minimizes discord_pre_opt over the sphere: lattice scan then alternating
/// golden-section refinement of (polar, azimuth). Grid ties go to the
/// lexicographically smallest (polar, azimuth).
inline DiscordResult quantum_discord(const EncodingSet &enc, const OptimizerSettings &opts = {}) {
    if (opts.polar_points < 2 || opts.azimuth_points < 2) {
        throw std::invalid_argument("quantum_discord: grid needs at least 2 points per axis");
    }
    if (!(opts.tolerance > 0.0)) {
        throw std::invalid_argument("quantum_discord: tolerance must be positive");
    }
    const auto &r = enc.bloch();
    long evals = 0;
    auto objective = [&](double polar, double azimuth) {
        ++evals;
        const double s = std::sin(polar);
        return detail::conditional_entropy_bloch(r, {s * std::cos(azimuth), s * std::sin(azimuth), std::cos(polar)});
    };

    const double hp0 = kPi / (opts.polar_points - 1);
    const double ha0 = kPi / (opts.azimuth_points - 1);
    double best_p = 0.0;
    double best_a = 0.0;
    double best = objective(0.0, 0.0);
    for (int i = 0; i < opts.polar_points; ++i) {
        const double polar = i * hp0;
        for (int j = 0; j < opts.azimuth_points; ++j) {
            const double az = j * ha0;
            const double v = objective(polar, az);
            if (v < best) {
                best = v;
                best_p = polar;
                best_a = az;
            }
        }
    }

    double hp = hp0;
    double ha = ha0;
    const double line_tol = 0.1 * opts.tolerance;
    int steps = 0;
    while (hp >= opts.tolerance || ha >= opts.tolerance) {
        if (steps + 2 > opts.max_refine_steps) {
            throw ConvergenceError("quantum_discord: refinement step cap reached");
        }
        const double p0 = best_p;
        const double a0 = best_a;
        const auto lp = golden_section_minimize([&](double p) { return objective(p, best_a); }, best_p - hp,
                                                best_p + hp, line_tol);
        if (lp.value < best) {
            best = lp.value;
            best_p = lp.x;
        }
        const auto la = golden_section_minimize([&](double a) { return objective(best_p, a); }, best_a - ha,
                                                best_a + ha, line_tol);
        if (la.value < best) {
            best = la.value;
            best_a = la.x;
        }
        steps += 2;
        // Keep the bracket while the optimum is still moving across it.
        if (std::abs(best_p - p0) < 0.25 * hp) {
            hp *= 0.5;
        }
        if (std::abs(best_a - a0) < 0.25 * ha) {
            ha *= 0.5;
        }
    }
    return {discord_offset(enc) + best,
            MeasurementDirection::from_angles(best_p, best_a),
            best_p,
            best_a,
            best,
            evals};
}

/// J = S(register) - min_k sum p_k S(rho^k) = I - D.
inline double classical_correlation(const EncodingSet &enc, const OptimizerSettings &opts = {}) {
    const ComplexMatrix rho = assemble_cq_state(enc).dense();
    const double s_register = vn_entropy(partial_trace(rho, 4, 2, Subsystem::First));
    return s_register - quantum_discord(enc, opts).min_conditional_entropy;
}

}  // namespace qracd

#endif  // QRACD_DISCORD_HPP
