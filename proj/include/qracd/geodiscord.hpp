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

#ifndef QRACD_GEODISCORD_HPP
#define QRACD_GEODISCORD_HPP

// Geometric discord of the classical-quantum state, measured on the qubit,
// through the saturated 2 x n lower bound with n = 4:
//
//   D_G = (1/8) (trace G - lambda_max(G)),   G = x x^t + (2/n) T T^t.
//
// The state is diagonal on the register, so only the diagonal generators
// W1, W2, W3 give nonzero correlation entries and T reduces to 3 x 3.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "qracd/qmath.hpp"
#include "qracd/qrac.hpp"

namespace qracd {

struct BlochDecomposition {
    Vec3 x;
    /// t[i][j] pairs Pauli i with W_{j+1}.
    Mat3 t;
    Mat3 g;
};

inline BlochDecomposition bloch_decompose(const std::array<Vec3, 4> &r) {
    BlochDecomposition d{};
    for (int i = 0; i < 3; ++i) {
        d.x[i] = 0.25 * (r[0][i] + r[1][i] + r[2][i] + r[3][i]);
        for (int j = 0; j < 3; ++j) {
            // (m n / 4) Tr(rho sigma_i x W_j) = (1/2) sum_a r_a,i W_j[a]
            double s = 0.0;
            for (int a = 0; a < 4; ++a) {
                s += r[a][i] * kDiagonalSu4[j][a];
            }
            d.t[i][j] = 0.5 * s;
        }
    }
    for (int i = 0; i < 3; ++i) {
        for (int k = i; k < 3; ++k) {
            const double tt = d.t[i][0] * d.t[k][0] + d.t[i][1] * d.t[k][1] + d.t[i][2] * d.t[k][2];
            d.g[i][k] = d.g[k][i] = d.x[i] * d.x[k] + 0.5 * tt;
        }
    }
    return d;
}

inline BlochDecomposition bloch_decompose(const EncodingSet &enc) { return bloch_decompose(enc.bloch()); }

/// Sum of the two smaller eigenvalues of G over 8, clamped at 0 against roundoff.
inline double geometric_discord(const std::array<Vec3, 4> &r) {
    const BlochDecomposition d = bloch_decompose(r);
    const RealSpectrum ev = eig_sym3(d.g);
    return std::max(0.0, (ev[1] + ev[2]) / 8.0);
}

inline double geometric_discord(const EncodingSet &enc) { return geometric_discord(enc.bloch()); }

struct PlanarGdClosed {
    /// (4 + sqrt(2 Delta))/8, (4 - sqrt(2 Delta))/8, 0
    RealSpectrum lambdas;
    double discriminant;
    double d_g;
};

/// Closed-form spectrum of G for encodings in the x-z plane.
inline PlanarGdClosed planar_gd_closed(const std::array<double, 4> &delta) {
    const auto c4 = [&](int i, int j) { return std::cos(4.0 * (delta[i] - delta[j])); };
    double disc = 2.0 + c4(0, 3) + c4(1, 2) - c4(0, 1) - c4(0, 2) - c4(1, 3) - c4(2, 3);
    disc = std::clamp(disc, 0.0, 8.0);
    const double root = std::sqrt(2.0 * disc);
    const double small = (4.0 - root) / 8.0;
    return {RealSpectrum({(4.0 + root) / 8.0, small, 0.0}), disc, small / 8.0};
}

inline PlanarGdClosed planar_gd_closed(const EncodingAngles &angles) {
    if (angles.phi[0] != 0.0 || angles.phi[1] != 0.0) {
        throw std::invalid_argument("planar_gd_closed: phases must be zero");
    }
    return planar_gd_closed(angles.delta);
}

}  // namespace qracd

#endif  // QRACD_GEODISCORD_HPP
