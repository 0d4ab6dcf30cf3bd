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

// Qubit states on the Poincare sphere in the tau convention.
//
// The poles are the circular polarizations, RCP = (1, i)/sqrt2 at (0,0,1) and
// LCP at (0,0,-1); the equator holds the linear polarizations, with the state
// linear at angle a to x1 sitting at (cos 2a, sin 2a, 0). A pure state m has
// density matrix rho(m) = (tau0 + m . tau) / 2.

#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "turnkit/su2.hpp"
#include "turnkit/turns.hpp"
#include "turnkit/vec3.hpp"

namespace turnkit {

/// Normalized Jones vector (a pure qubit state with its phase).
class JonesVector {
public:
    JonesVector() = default;

    JonesVector(Complex e1, Complex e2) {
        const double n = std::sqrt(std::norm(e1) + std::norm(e2));
        if (!(n > 1e-12)) throw Error(ErrorCode::NearZeroNorm, "Jones vector has zero intensity");
        e1_ = e1 / n;
        e2_ = e2 / n;
    }

    Complex e1() const { return e1_; }
    Complex e2() const { return e2_; }

    /// e^{i gamma} E.
    JonesVector with_phase(double gamma) const {
        const Complex p = std::polar(1.0, gamma);
        return JonesVector(e1_ * p, e2_ * p);
    }

    double distance(const JonesVector& o) const { return std::sqrt(std::norm(e1_ - o.e1_) + std::norm(e2_ - o.e2_)); }

private:
    Complex e1_{1.0, 0.0};
    Complex e2_{0.0, 0.0};
};

/// A point of the Poincare ball: direction on the sphere plus the degree of
/// polarization r (1 for pure states, 0 for the maximally mixed state).
struct PoincarePoint {
    UnitVec3 direction = UnitVec3::e3();
    double radius = 1.0;

    PoincarePoint() = default;
    PoincarePoint(const UnitVec3& d, double r = 1.0) : direction(d), radius(r) {
        if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::OutOfRange, "radius must lie in [0, 1]");
    }
};

struct DensityMatrix {
    ComplexMatrix2 m;

    Complex trace() const { return m.trace(); }
};

/// Real 3x3 matrix, row-major; rotations of the Poincare sphere.
struct Rotation3 {
    std::array<double, 9> r{1, 0, 0, 0, 1, 0, 0, 0, 1};

    double operator()(int i, int j) const { return r[3 * i + j]; }
    double& operator()(int i, int j) { return r[3 * i + j]; }

    Vec3 operator*(const Vec3& v) const {
        return {r[0] * v.x + r[1] * v.y + r[2] * v.z, r[3] * v.x + r[4] * v.y + r[5] * v.z,
                r[6] * v.x + r[7] * v.y + r[8] * v.z};
    }
    Rotation3 operator*(const Rotation3& o) const {
        Rotation3 p;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                p(i, j) = s;
            }
        return p;
    }
    double det() const {
        return r[0] * (r[4] * r[8] - r[5] * r[7]) - r[1] * (r[3] * r[8] - r[5] * r[6]) +
               r[2] * (r[3] * r[7] - r[4] * r[6]);
    }
    double max_abs_diff(const Rotation3& o) const {
        double d = 0.0;
        for (int k = 0; k < 9; ++k) d = std::max(d, std::abs(r[k] - o.r[k]));
        return d;
    }
};

/// E(m) with the phase convention
///   E = ( e^{-i phi/2} cos(theta/2) + e^{i phi/2} sin(theta/2),
///         i (e^{-i phi/2} cos(theta/2) - e^{i phi/2} sin(theta/2)) ) / sqrt2
/// where theta, phi are the polar and azimuthal angles of m.
inline JonesVector jones_from_point(const UnitVec3& m) {
    const double theta = m.polar();
    const double phi = m.azimuth();
    const Complex minus = std::polar(std::cos(0.5 * theta), -0.5 * phi);
    const Complex plus = std::polar(std::sin(0.5 * theta), 0.5 * phi);
    const double r = 1.0 / std::sqrt(2.0);
    return JonesVector((minus + plus) * r, Complex(0, 1) * (minus - plus) * r);
}

/// m_k = tr(rho tau_k) with rho = E E^dagger; the global phase is discarded.
inline UnitVec3 point_from_jones(const JonesVector& e) {
    const Complex e1 = e.e1();
    const Complex e2 = e.e2();
    const Complex cross_term = std::conj(e1) * e2;
    return UnitVec3(Vec3{std::norm(e1) - std::norm(e2), 2.0 * cross_term.real(), 2.0 * cross_term.imag()});
}

/// (tau0 + r m . tau) / 2.
inline DensityMatrix density_from_point(const PoincarePoint& p) {
    const Vec3 m = p.direction.vec() * p.radius;
    return {{{Complex(0.5 * (1.0 + m.x), 0.0), Complex(0.5 * m.y, -0.5 * m.z), Complex(0.5 * m.y, 0.5 * m.z),
              Complex(0.5 * (1.0 - m.x), 0.0)}}};
}

inline DensityMatrix density_from_jones(const JonesVector& e) {
    const Complex a = e.e1();
    const Complex b = e.e2();
    return {{{a * std::conj(a), a * std::conj(b), b * std::conj(a), b * std::conj(b)}}};
}

/// Von Neumann entropy in bits of a state at radius r of the Poincare ball.
inline double entropy(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::OutOfRange, "radius must lie in [0, 1]");
    double s = 0.0;
    for (const double p : {0.5 * (1.0 + r), 0.5 * (1.0 - r)}) {
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

/// <E1, E2>, conjugate-linear in the first argument.
inline Complex inner_product(const JonesVector& a, const JonesVector& b) {
    return std::conj(a.e1()) * b.e1() + std::conj(a.e2()) * b.e2();
}

inline JonesVector apply_gate(const Su2Gate& u, const JonesVector& e) {
    const ComplexMatrix2 m = u.to_matrix();
    return JonesVector(m(0, 0) * e.e1() + m(0, 1) * e.e2(), m(1, 0) * e.e1() + m(1, 1) * e.e2());
}

/// T(n, l) rotates the sphere about n by 2l:
///   m -> (m.n) n + cos 2l [m - (m.n) n] + sin 2l n ^ m
inline UnitVec3 apply_turn(const Turn& t, const UnitVec3& m) {
    const Vec3& n = t.axis().vec();
    const Vec3& v = m.vec();
    const Vec3 along = n * dot(v, n);
    const double c = std::cos(2.0 * t.length());
    const double s = std::sin(2.0 * t.length());
    return UnitVec3(along + (v - along) * c + cross(n, v) * s);
}

/// Turns act on the direction only; the degree of polarization is kept.
inline PoincarePoint apply_turn(const Turn& t, const PoincarePoint& p) {
    return PoincarePoint(apply_turn(t, p.direction), p.radius);
}

/// Adjoint image of u in SO(3); u and -u give the same rotation.
inline Rotation3 so3_image(const Su2Gate& u) {
    const double q0 = u.a0();
    const Vec3& q = u.a();
    const double d = q0 * q0 - dot(q, q);
    Rotation3 r;
    r(0, 0) = d + 2.0 * q.x * q.x;
    r(1, 1) = d + 2.0 * q.y * q.y;
    r(2, 2) = d + 2.0 * q.z * q.z;
    r(0, 1) = 2.0 * (q.x * q.y - q0 * q.z);
    r(1, 0) = 2.0 * (q.x * q.y + q0 * q.z);
    r(0, 2) = 2.0 * (q.x * q.z + q0 * q.y);
    r(2, 0) = 2.0 * (q.x * q.z - q0 * q.y);
    r(1, 2) = 2.0 * (q.y * q.z - q0 * q.x);
    r(2, 1) = 2.0 * (q.y * q.z + q0 * q.x);
    return r;
}

}  // namespace turnkit
