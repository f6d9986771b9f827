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

#ifndef QRACD_QMATH_HPP
#define QRACD_QMATH_HPP

// Dense complex matrices of dimension <= 8, entropies in bits, and the
// generator sets used by the Bloch decomposition of a 2 x 4 state.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

namespace qracd {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

inline constexpr double kPi = std::numbers::pi;

/// Entrywise tolerance for Hermiticity and trace checks on density operators.
inline constexpr double kDensityTol = 1e-12;
/// Eigenvalues in [-kNegativeTol, 0) are clamped to zero.
inline constexpr double kNegativeTol = 1e-10;
/// Eigenvalues at or below this value contribute exactly zero entropy.
inline constexpr double kZeroEigenvalue = 1e-12;

inline double dot(const Vec3 &a, const Vec3 &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }
inline Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3 &a) { return {s * a[0], s * a[1], s * a[2]}; }

inline Vec3 apply(const Mat3 &m, const Vec3 &v) {
    return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

inline double trace(const Mat3 &m) { return m[0][0] + m[1][1] + m[2][2]; }

/// Dense row-major complex matrix.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) {
            throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
        }
    }
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows == 0 || cols == 0) {
            throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
        }
        if (data_.size() != rows * cols) {
            throw std::invalid_argument("ComplexMatrix: entry count does not match dimensions");
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static ComplexMatrix diagonal(std::span<const double> d) {
        ComplexMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            m(i, i) = d[i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const cplx> entries() const { return data_; }

    cplx trace() const {
        require_square("trace");
        cplx t = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    bool is_hermitian(double tol = kDensityTol) const {
        if (!is_square()) {
            return false;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = r; c < cols_; ++c) {
                if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                    return false;
                }
            }
        }
        return true;
    }

    double max_abs_diff(const ComplexMatrix &other) const {
        require_same_shape(other, "max_abs_diff");
        double m = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            m = std::max(m, std::abs(data_[i] - other.data_[i]));
        }
        return m;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &o) {
        require_same_shape(o, "operator+");
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += o.data_[i];
        }
        return *this;
    }
    ComplexMatrix &operator-=(const ComplexMatrix &o) {
        require_same_shape(o, "operator-");
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= o.data_[i];
        }
        return *this;
    }
    ComplexMatrix &operator*=(cplx s) {
        for (auto &v : data_) {
            v *= s;
        }
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("ComplexMatrix: inner dimensions differ");
        }
        ComplexMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx v = a(r, k);
                if (v == cplx{}) {
                    continue;
                }
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    out(r, c) += v * b(k, c);
                }
            }
        }
        return out;
    }

   private:
    void require_square(const char *what) const {
        if (!is_square()) {
            throw std::invalid_argument(std::string("ComplexMatrix::") + what + ": matrix is not square");
        }
    }
    void require_same_shape(const ComplexMatrix &o, const char *what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw std::invalid_argument(std::string("ComplexMatrix::") + what + ": shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Real eigenvalues or probabilities, kept sorted nonincreasing.
class RealSpectrum {
   public:
    RealSpectrum() = default;
    explicit RealSpectrum(std::vector<double> values) : values_(std::move(values)) {
        std::sort(values_.begin(), values_.end(), std::greater<>());
    }
    const std::vector<double> &values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double max() const { return values_.front(); }
    double sum() const {
        double s = 0.0;
        for (double v : values_) {
            s += v;
        }
        return s;
    }

   private:
    std::vector<double> values_;
};

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const cplx v = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
                }
            }
        }
    }
    return out;
}

enum class Subsystem { First, Second };

/// Reduced operator of the kept factor of a (dim_first x dim_second) operator.
inline ComplexMatrix partial_trace(const ComplexMatrix &rho, std::size_t dim_first, std::size_t dim_second,
                                   Subsystem keep) {
    const std::size_t n = dim_first * dim_second;
    if (dim_first == 0 || dim_second == 0 || rho.rows() != n || rho.cols() != n) {
        throw std::invalid_argument("partial_trace: operator is not (dA*dB) x (dA*dB)");
    }
    if (keep == Subsystem::First) {
        ComplexMatrix out(dim_first, dim_first);
        for (std::size_t i = 0; i < dim_first; ++i) {
            for (std::size_t j = 0; j < dim_first; ++j) {
                cplx s = 0.0;
                for (std::size_t k = 0; k < dim_second; ++k) {
                    s += rho(i * dim_second + k, j * dim_second + k);
                }
                out(i, j) = s;
            }
        }
        return out;
    }
    ComplexMatrix out(dim_second, dim_second);
    for (std::size_t i = 0; i < dim_second; ++i) {
        for (std::size_t j = 0; j < dim_second; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < dim_first; ++k) {
                s += rho(k * dim_second + i, k * dim_second + j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

/// Eigenvalues of a Hermitian matrix (no normalization requirement).
inline RealSpectrum hermitian_spectrum(const ComplexMatrix &h) {
    if (!h.is_hermitian()) {
        throw std::invalid_argument("hermitian_spectrum: matrix is not Hermitian");
    }
    const auto n = static_cast<Eigen::Index>(h.rows());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = h(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return RealSpectrum(std::move(ev));
}

/// Spectrum of a density operator with eigenvalues in [-1e-10, 0) clamped to 0.
inline RealSpectrum density_spectrum(const ComplexMatrix &rho) {
    if (!rho.is_square()) {
        throw std::invalid_argument("density_spectrum: matrix is not square");
    }
    const cplx tr = rho.trace();
    if (std::abs(tr - 1.0) > kDensityTol) {
        throw std::invalid_argument("density_spectrum: trace differs from 1");
    }
    std::vector<double> ev = hermitian_spectrum(rho).values();
    for (double &v : ev) {
        if (v < -kNegativeTol) {
            throw std::invalid_argument("density_spectrum: negative eigenvalue");
        }
        v = std::max(v, 0.0);
    }
    return RealSpectrum(std::move(ev));
}

/// -sum p log2 p with 0 log 0 = 0.
inline double shannon_entropy(std::span<const double> p) {
    double total = 0.0;
    for (double v : p) {
        if (v < -kDensityTol) {
            throw std::invalid_argument("shannon_entropy: negative probability");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw std::invalid_argument("shannon_entropy: probabilities do not sum to 1");
    }
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) {
            h -= v * std::log2(v);
        }
    }
    return h;
}

/// Base-2 von Neumann entropy.
inline double vn_entropy(const ComplexMatrix &rho) {
    const RealSpectrum spec = density_spectrum(rho);
    double h = 0.0;
    for (double v : spec.values()) {
        if (v > kZeroEigenvalue) {
            h -= v * std::log2(v);
        }
    }
    return h;
}

/// Eigenvalues of a real symmetric 3x3 matrix by cyclic Jacobi rotations.
inline RealSpectrum eig_sym3(const Mat3 &g) {
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (std::abs(g[i][j] - g[j][i]) > kDensityTol) {
                throw std::invalid_argument("eig_sym3: matrix is not symmetric");
            }
        }
    }
    double a[3][3];
    double scale = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            a[i][j] = i <= j ? g[i][j] : g[j][i];
            scale += a[i][j] * a[i][j];
        }
    }
    constexpr double kTol = 1e-13;
    constexpr int kMaxSweeps = 50;
    const double threshold = kTol * kTol * scale;
    constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        const double off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
        if (off <= threshold) {
            break;
        }
        for (const auto &pq : kPairs) {
            const int p = pq[0];
            const int q = pq[1];
            const int r = 3 - p - q;
            const double apq = a[p][q];
            if (apq == 0.0) {
                continue;
            }
            const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
            double t;
            if (std::abs(theta) > 1e150) {
                t = 0.5 / theta;
            } else {
                t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            }
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            a[p][p] -= t * apq;
            a[q][q] += t * apq;
            a[p][q] = a[q][p] = 0.0;
            const double arp = a[r][p];
            const double arq = a[r][q];
            a[r][p] = a[p][r] = c * arp - s * arq;
            a[r][q] = a[q][r] = s * arp + c * arq;
        }
    }
    return RealSpectrum({a[0][0], a[1][1], a[2][2]});
}

/// Pauli matrices and the diagonal SU(4) generators W1, W2, W3.
struct Generators {
    std::array<ComplexMatrix, 3> pauli;
    std::array<ComplexMatrix, 3> diagonal_su4;
};

/// Diagonals of W1 = diag(1,-1,0,0), W2 = diag(1,1,-2,0)/sqrt3, W3 = diag(1,1,1,-3)/sqrt6.
inline constexpr std::array<std::array<double, 4>, 3> kDiagonalSu4 = {{
    {1.0, -1.0, 0.0, 0.0},
    {1.0 / std::numbers::sqrt3, 1.0 / std::numbers::sqrt3, -2.0 / std::numbers::sqrt3, 0.0},
    {0.40824829046386301637, 0.40824829046386301637, 0.40824829046386301637, -1.2247448713915890491},
}};

inline Generators generators() {
    const cplx i{0.0, 1.0};
    Generators g{
        {ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}), ComplexMatrix(2, 2, {0.0, -i, i, 0.0}),
         ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0})},
        {ComplexMatrix::diagonal(kDiagonalSu4[0]), ComplexMatrix::diagonal(kDiagonalSu4[1]),
         ComplexMatrix::diagonal(kDiagonalSu4[2])},
    };
    return g;
}

/// (I + r . sigma) / 2
inline ComplexMatrix bloch_density(const Vec3 &r) {
    return ComplexMatrix(2, 2, {cplx{0.5 * (1.0 + r[2]), 0.0}, cplx{0.5 * r[0], -0.5 * r[1]},
                                cplx{0.5 * r[0], 0.5 * r[1]}, cplx{0.5 * (1.0 - r[2]), 0.0}});
}

}  // namespace qracd

#endif  // QRACD_QMATH_HPP
