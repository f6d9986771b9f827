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

#ifndef QRACD_QRAC_HPP
#define QRACD_QRAC_HPP

// Pure-state encodings of the 2->1 random access code, the classical-quantum
// state they induce, and Bob's figures of merit (success probability and the
// two-dimensional witness).
//
// Register labels are ordered a = 00, 01, 10, 11 throughout. The joint state
// uses the layout register (4) x qubit (2).

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "qracd/qmath.hpp"

namespace qracd {

inline constexpr double kUnitTol = 1e-12;

/// Offsets from the optimal half-angles pi/8, 7pi/8, 3pi/8, 5pi/8 and the
/// phases of states 10 and 11, all in radians.
struct EncodingAngles {
    std::array<double, 4> delta{};
    std::array<double, 2> phi{};
};

/// Optimal half-angles of the four encoding states, in register order.
inline constexpr std::array<double, 4> kBaseHalfAngles = {kPi / 8.0, 7.0 * kPi / 8.0, 3.0 * kPi / 8.0,
                                                          5.0 * kPi / 8.0};

/// Bloch vector of cos(t)|0> + e^{i phase} sin(t)|1> with t = base(a) + delta.
inline Vec3 encoding_bloch_vector(int a, double delta, double phase) {
    const double polar = 2.0 * (kBaseHalfAngles[a] + delta);
    const double s = std::sin(polar);
    return {s * std::cos(phase), s * std::sin(phase), std::cos(polar)};
}

/// Four pure qubit states given by their unit Bloch vectors. Sets built from
/// angles also remember them.
class EncodingSet {
   public:
    static EncodingSet from_angles(const EncodingAngles &angles) {
        EncodingSet e;
        e.angles_ = angles;
        const std::array<double, 4> phase = {0.0, 0.0, angles.phi[0], angles.phi[1]};
        for (int a = 0; a < 4; ++a) {
            e.bloch_[a] = encoding_bloch_vector(a, angles.delta[a], phase[a]);
        }
        return e;
    }

    static EncodingSet from_bloch(const std::array<Vec3, 4> &bloch) {
        for (const auto &r : bloch) {
            if (std::abs(norm(r) - 1.0) > kUnitTol) {
                throw std::invalid_argument("EncodingSet: Bloch vectors must have unit norm");
            }
        }
        EncodingSet e;
        e.bloch_ = bloch;
        return e;
    }

    const std::array<Vec3, 4> &bloch() const { return bloch_; }
    const Vec3 &bloch(int a) const { return bloch_[a]; }
    const std::optional<EncodingAngles> &angles() const { return angles_; }

    Vec3 mean_bloch() const { return 0.25 * (bloch_[0] + bloch_[1] + bloch_[2] + bloch_[3]); }

    bool is_planar() const {
        for (const auto &r : bloch_) {
            if (r[1] != 0.0) {
                return false;
            }
        }
        return true;
    }

   private:
    EncodingSet() = default;

    std::optional<EncodingAngles> angles_;
    std::array<Vec3, 4> bloch_{};
};

inline EncodingSet encoding_states(const std::array<double, 4> &delta, const std::array<double, 2> &phi) {
    return EncodingSet::from_angles({delta, phi});
}

inline EncodingSet optimal_encoding() { return encoding_states({0, 0, 0, 0}, {0, 0}); }

/// Rotates the orthogonal pair {00, 11} by +delta and {01, 10} by -delta.
inline EncodingSet planar_rotation(double delta) { return encoding_states({delta, -delta, -delta, delta}, {0, 0}); }

/// Unit direction defining the qubit projectors (I +- a.sigma)/2.
class MeasurementDirection {
   public:
    /// Rejects vectors whose norm differs from 1 by more than 1e-12.
    static MeasurementDirection from_unit(const Vec3 &a) {
        if (std::abs(norm(a) - 1.0) > kUnitTol) {
            throw std::invalid_argument("MeasurementDirection: vector is not unit norm");
        }
        return MeasurementDirection(a);
    }

    static MeasurementDirection normalized(const Vec3 &a) {
        const double n = norm(a);
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw std::invalid_argument("MeasurementDirection: cannot normalize a zero vector");
        }
        return MeasurementDirection((1.0 / n) * a);
    }

    /// Polar angle from +z, azimuth from +x toward +y.
    static MeasurementDirection from_angles(double polar, double azimuth) {
        const double s = std::sin(polar);
        return MeasurementDirection({s * std::cos(azimuth), s * std::sin(azimuth), std::cos(polar)});
    }

    static MeasurementDirection x() { return MeasurementDirection({1.0, 0.0, 0.0}); }
    static MeasurementDirection y() { return MeasurementDirection({0.0, 1.0, 0.0}); }
    static MeasurementDirection z() { return MeasurementDirection({0.0, 0.0, 1.0}); }

    const Vec3 &vec() const { return a_; }
    double operator[](int i) const { return a_[i]; }

    /// (I + sign * a.sigma)/2 with sign = +1 or -1.
    ComplexMatrix projector(int sign) const {
        const double s = sign >= 0 ? 1.0 : -1.0;
        return bloch_density(s * a_);
    }

   private:
    explicit MeasurementDirection(const Vec3 &a) : a_(a) {}
    Vec3 a_;
};

/// Witness sign table c[y][a]; each row sums to zero.
inline constexpr std::array<std::array<int, 4>, 2> kWitnessSigns = {{
    {+1, +1, -1, -1},
    {+1, -1, +1, -1},
}};

/// Block-diagonal classical-quantum state; block a holds rho_a / 4.
struct CqState {
    std::array<ComplexMatrix, 4> blocks;

    ComplexMatrix dense() const {
        ComplexMatrix out(8, 8);
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    out(2 * a + i, 2 * a + j) = blocks[a](i, j);
                }
            }
        }
        return out;
    }
};

inline CqState assemble_cq_state(const EncodingSet &enc) {
    CqState s;
    for (int a = 0; a < 4; ++a) {
        s.blocks[a] = 0.25 * bloch_density(enc.bloch(a));
    }
    return s;
}

inline ComplexMatrix reduced_qubit(const EncodingSet &enc) { return bloch_density(enc.mean_bloch()); }

/// Born probability of outcome 0 (the +m projector) for state a.
inline double prob_outcome_zero(const EncodingSet &enc, int a, const MeasurementDirection &m) {
    return 0.5 * (1.0 + dot(m.vec(), enc.bloch(a)));
}

/// Average probability that measurement y recovers bit y of the label,
/// outcome 0 decoding bit value 0.
inline double success_probability(const EncodingSet &enc, const MeasurementDirection &m0,
                                  const MeasurementDirection &m1) {
    const std::array<const MeasurementDirection *, 2> m = {&m0, &m1};
    double total = 0.0;
    for (int a = 0; a < 4; ++a) {
        const int bits[2] = {(a >> 1) & 1, a & 1};
        for (int y = 0; y < 2; ++y) {
            const double p0 = prob_outcome_zero(enc, a, *m[y]);
            total += bits[y] == 0 ? p0 : 1.0 - p0;
        }
    }
    return total / 8.0;
}

/// T = sum_{a,y} c[y][a] P(b=0 | a, y).
inline double witness_value(const EncodingSet &enc, const MeasurementDirection &m0, const MeasurementDirection &m1) {
    const std::array<const MeasurementDirection *, 2> m = {&m0, &m1};
    double t = 0.0;
    for (int y = 0; y < 2; ++y) {
        for (int a = 0; a < 4; ++a) {
            t += kWitnessSigns[y][a] * prob_outcome_zero(enc, a, *m[y]);
        }
    }
    return t;
}

/// v_y = sum_a c[y][a] r_a, so that T = (m0.v0 + m1.v1)/2.
inline std::array<Vec3, 2> witness_vectors(const EncodingSet &enc) {
    std::array<Vec3, 2> v{};
    for (int y = 0; y < 2; ++y) {
        for (int a = 0; a < 4; ++a) {
            v[y] = v[y] + static_cast<double>(kWitnessSigns[y][a]) * enc.bloch(a);
        }
    }
    return v;
}

struct WitnessOptimum {
    double t_max;
    MeasurementDirection m0;
    MeasurementDirection m1;
};

/// Global maximum over projective measurements: T = (|v0| + |v1|)/2 with
/// m_y along v_y (x-hat when v_y vanishes).
inline WitnessOptimum witness_max_closed(const EncodingSet &enc) {
    const auto v = witness_vectors(enc);
    auto along = [](const Vec3 &w) {
        return norm(w) > 0.0 ? MeasurementDirection::normalized(w) : MeasurementDirection::x();
    };
    return {0.5 * (norm(v[0]) + norm(v[1])), along(v[0]), along(v[1])};
}

}  // namespace qracd

#endif  // QRACD_QRAC_HPP
