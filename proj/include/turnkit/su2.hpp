// Copyright 2026 The Turnkit Authors
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

// SU(2) arithmetic on homogeneous Euler parameters.
//
// A gate is stored as the unit quaternion (a0, a) with
//
//     u = a0 tau0 - i a . tau
//
// where the Pauli-like triple is fixed to tau1 = sigma3, tau2 = sigma1,
// tau3 = sigma2. The 2x2 complex matrix is a derived view (`to_matrix`).

#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "turnkit/errors.hpp"
#include "turnkit/vec3.hpp"

namespace turnkit {

using Complex = std::complex<double>;

/// General 2x2 complex matrix, row-major.
struct ComplexMatrix2 {
    std::array<Complex, 4> m{};

    constexpr Complex operator()(int r, int c) const { return m[2 * r + c]; }
    constexpr Complex& operator()(int r, int c) { return m[2 * r + c]; }

    static ComplexMatrix2 identity() { return {{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)}}; }

    ComplexMatrix2 operator*(const ComplexMatrix2& o) const {
        ComplexMatrix2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
        return r;
    }
    ComplexMatrix2 operator*(Complex s) const {
        ComplexMatrix2 r = *this;
        for (auto& x : r.m) x *= s;
        return r;
    }
    ComplexMatrix2 operator+(const ComplexMatrix2& o) const {
        ComplexMatrix2 r = *this;
        for (int k = 0; k < 4; ++k) r.m[k] += o.m[k];
        return r;
    }
    ComplexMatrix2 operator-(const ComplexMatrix2& o) const { return *this + o * Complex(-1, 0); }

    ComplexMatrix2 adjoint() const { return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}}; }
    Complex trace() const { return m[0] + m[3]; }
    Complex det() const { return m[0] * m[3] - m[1] * m[2]; }

    /// Largest entrywise modulus of the difference.
    double max_abs_diff(const ComplexMatrix2& o) const {
        double d = 0.0;
        for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(m[k] - o.m[k]));
        return d;
    }
};

namespace tau {
// tau1 = sigma3, tau2 = sigma1, tau3 = sigma2.
inline const ComplexMatrix2 t0{{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)}};
inline const ComplexMatrix2 t1{{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0)}};
inline const ComplexMatrix2 t2{{Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)}};
inline const ComplexMatrix2 t3{{Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)}};

/// tau_k for k in {0, 1, 2, 3}.
inline const ComplexMatrix2& get(int k) {
    static const std::array<const ComplexMatrix2*, 4> all{&t0, &t1, &t2, &t3};
    return *all.at(static_cast<std::size_t>(k));
}
}  // namespace tau

class Su2Gate {
public:
    /// The identity tau0.
    constexpr Su2Gate() = default;

    /// Normalizes an arbitrary nonzero 4-vector onto S^3.
    static Su2Gate from_components(double a0, const Vec3& a) {
        const double n = std::sqrt(a0 * a0 + dot(a, a));
        if (!(n > 1e-9)) throw Error(ErrorCode::NearZeroNorm, "homogeneous Euler parameters have near-zero norm");
        return Su2Gate(a0 / n, a / n);
    }

    /// For values that are unit up to rounding. Drift beyond 1e-6 indicates a
    /// caller bug and is rejected.
    static Su2Gate from_unit(double a0, const Vec3& a) {
        const double n = std::sqrt(a0 * a0 + dot(a, a));
        if (!(std::abs(n - 1.0) <= 1e-6))
            throw Error(ErrorCode::NormDrift, "quaternion norm drifted from 1 by more than 1e-6");
        return Su2Gate(a0 / n, a / n);
    }

    constexpr double a0() const { return a0_; }
    constexpr const Vec3& a() const { return a_; }
    constexpr std::array<double, 4> components() const { return {a0_, a_.x, a_.y, a_.z}; }

    Su2Gate operator-() const { return Su2Gate(-a0_, -a_); }

    ComplexMatrix2 to_matrix() const {
        return {{Complex(a0_, -a_.x), Complex(-a_.z, -a_.y), Complex(a_.z, -a_.y), Complex(a0_, a_.x)}};
    }

    /// Is this +tau0 or -tau0 (within `tol` on the vector part)?
    bool is_central(double tol = 1e-9) const { return norm(a_) <= tol; }

private:
    constexpr Su2Gate(double a0, const Vec3& a) : a0_(a0), a_(a) {}

    double a0_ = 1.0;
    Vec3 a_{};
};

inline Su2Gate gate_from_components(double a0, const Vec3& a) { return Su2Gate::from_components(a0, a); }

/// Quaternion product; equals the matrix product left.to_matrix() *
/// right.to_matrix().
inline Su2Gate multiply(const Su2Gate& left, const Su2Gate& right) {
    const double a0 = left.a0();
    const double b0 = right.a0();
    const Vec3& a = left.a();
    const Vec3& b = right.a();
    return Su2Gate::from_unit(a0 * b0 - dot(a, b), b * a0 + a * b0 + cross(a, b));
}

inline Su2Gate operator*(const Su2Gate& left, const Su2Gate& right) { return multiply(left, right); }

inline Su2Gate inverse(const Su2Gate& u) { return Su2Gate::from_unit(u.a0(), -u.a()); }

/// [v, u] = v^-1 u^-1 v u.
inline Su2Gate commutator(const Su2Gate& v, const Su2Gate& u) { return inverse(v) * inverse(u) * v * u; }

/// tr u = 2 a0 = 2 cos(turn length).
inline double trace(const Su2Gate& u) { return 2.0 * u.a0(); }

/// Euclidean distance between the quaternions.
inline double exact_distance(const Su2Gate& u, const Su2Gate& v) {
    const auto a = u.components();
    const auto b = v.components();
    double s = 0.0;
    for (int k = 0; k < 4; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
}

/// Distance modulo the global sign: min(|u - v|, |u + v|).
inline double projective_distance(const Su2Gate& u, const Su2Gate& v) {
    return std::min(exact_distance(u, v), exact_distance(u, -v));
}

inline bool exact_eq(const Su2Gate& u, const Su2Gate& v, double tol = 1e-10) { return exact_distance(u, v) <= tol; }
inline bool projective_eq(const Su2Gate& u, const Su2Gate& v, double tol = 1e-10) {
    return projective_distance(u, v) <= tol;
}

// ---------------------------------------------------------------------------
// Axis-angle form: u(n, alpha) = cos(alpha/2) tau0 - i sin(alpha/2) n . tau

struct AxisAngle {
    UnitVec3 axis = UnitVec3::e3();
    double angle = 0.0;       // SU(2) angle in [0, 2pi]; turn length is angle/2
    bool degenerate = false;  // set for +-tau0, where the axis is arbitrary
};

inline Su2Gate from_axis_angle(const AxisAngle& aa) {
    const double h = 0.5 * aa.angle;
    return Su2Gate::from_unit(std::cos(h), aa.axis.vec() * std::sin(h));
}

inline Su2Gate from_axis_angle(const UnitVec3& axis, double angle) { return from_axis_angle(AxisAngle{axis, angle}); }

/// Inverse of `from_axis_angle` with angle in [0, 2pi] faithful to the sign
/// of a0. Central gates report axis (0,0,1) and the degenerate flag.
inline AxisAngle to_axis_angle(const Su2Gate& u) {
    const double s = norm(u.a());
    AxisAngle out;
    out.angle = 2.0 * std::atan2(s, u.a0());
    if (s <= 1e-15) {
        out.degenerate = true;
        out.angle = u.a0() > 0.0 ? 0.0 : kTwoPi;
        return out;
    }
    out.axis = UnitVec3(u.a() / s);
    return out;
}

// ---------------------------------------------------------------------------
// Euler angles: u = exp(-i xi/2 tau3) exp(-i eta/2 tau1) exp(-i zeta/2 tau3)

struct EulerAngles {
    double xi = 0.0;
    double eta = 0.0;
    double zeta = 0.0;
};

inline Su2Gate from_euler(const EulerAngles& e) {
    const double ch = std::cos(0.5 * e.eta);
    const double sh = std::sin(0.5 * e.eta);
    const double sum = 0.5 * (e.xi + e.zeta);
    const double diff = 0.5 * (e.xi - e.zeta);
    return Su2Gate::from_unit(ch * std::cos(sum), {sh * std::cos(diff), sh * std::sin(diff), ch * std::sin(sum)});
}

/// Canonical Euler angles with eta in [0, pi], zeta in [0, 2pi) and xi in
/// [0, 4pi). The extended xi range makes the round trip sign-exact: with both
/// xi and zeta restricted to [0, 2pi) only half of SU(2) is reachable.
/// At eta in {0, pi} only xi +- zeta is determined and zeta is set to 0.
inline EulerAngles to_euler(const Su2Gate& u) {
    constexpr double kGimbalTol = 1e-13;
    const double a0 = u.a0();
    const Vec3& a = u.a();
    const double cos_half = std::hypot(a0, a.z);
    const double sin_half = std::hypot(a.x, a.y);

    EulerAngles e;
    e.eta = 2.0 * std::atan2(sin_half, cos_half);
    if (sin_half <= kGimbalTol) {
        e.eta = 0.0;
        e.xi = wrap_positive(2.0 * std::atan2(a.z, a0), 2.0 * kTwoPi);
        return e;
    }
    if (cos_half <= kGimbalTol) {
        e.eta = kPi;
        e.xi = wrap_positive(2.0 * std::atan2(a.y, a.x), 2.0 * kTwoPi);
        return e;
    }
    const double sum = std::atan2(a.z, a0);   // (xi + zeta) / 2
    const double diff = std::atan2(a.y, a.x);  // (xi - zeta) / 2
    double xi = sum + diff;
    double zeta = sum - diff;
    if (zeta < 0.0) {
        // Shifting both by 2pi preserves the gate exactly.
        zeta += kTwoPi;
        xi += kTwoPi;
    }
    // sum, diff in (-pi, pi] so zeta is now in [0, 2pi).
    e.xi = wrap_positive(xi, 2.0 * kTwoPi);
    e.zeta = zeta;
    return e;
}

/// Projects a unitary 2x2 matrix onto SU(2) by dividing out det^(1/2). The
/// square-root branch is fixed so that a0 >= 0 (ties broken by the first
/// nonzero of a1, a2, a3 being positive).
inline Su2Gate gate_from_unitary_matrix(const ComplexMatrix2& m, double unitarity_tol = 1e-8) {
    const ComplexMatrix2 prod = m * m.adjoint();
    if (prod.max_abs_diff(ComplexMatrix2::identity()) > unitarity_tol)
        throw Error(ErrorCode::NonUnitaryMatrix, "matrix is not unitary within tolerance");
    const ComplexMatrix2 s = m * (Complex(1, 0) / std::sqrt(m.det()));
    const double a0 = 0.5 * (s(0, 0) + s(1, 1)).real();
    const Vec3 a{0.5 * (s(1, 1) - s(0, 0)).imag(), -0.5 * (s(0, 1) + s(1, 0)).imag(),
                 0.5 * (s(1, 0) - s(0, 1)).real()};
    Su2Gate g = Su2Gate::from_components(a0, a);
    constexpr double kTie = 1e-12;
    const auto c = g.components();
    for (double x : c) {
        if (std::abs(x) <= kTie) continue;
        if (x < 0.0) g = -g;
        break;
    }
    return g;
}

}  // namespace turnkit
