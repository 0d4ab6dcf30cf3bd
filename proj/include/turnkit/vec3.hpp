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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "turnkit/errors.hpp"

namespace turnkit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces `x` into [0, period).
inline double wrap_positive(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) r += period;
    if (r >= period) r -= period;
    return r;
}

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::hypot(v.x, v.y, v.z); }

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// A point on the unit sphere. Construction normalizes its input.
class UnitVec3 {
public:
    constexpr UnitVec3() = default;

    explicit UnitVec3(const Vec3& v) {
        const double n = norm(v);
        if (!(n > 1e-12)) throw Error(ErrorCode::NearZeroNorm, "cannot normalize a zero vector");
        v_ = v / n;
    }

    UnitVec3(double x, double y, double z) : UnitVec3(Vec3{x, y, z}) {}

    /// Spherical coordinates: polar angle from +z, azimuth from +x.
    static UnitVec3 from_spherical(double theta, double phi) {
        return UnitVec3(Vec3{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)});
    }

    constexpr const Vec3& vec() const { return v_; }
    constexpr double x() const { return v_.x; }
    constexpr double y() const { return v_.y; }
    constexpr double z() const { return v_.z; }

    double polar() const { return std::atan2(std::hypot(v_.x, v_.y), v_.z); }
    double azimuth() const { return std::atan2(v_.y, v_.x); }

    UnitVec3 operator-() const { return from_unit(-v_); }
    operator const Vec3&() const { return v_; }

    static constexpr UnitVec3 e1() { return from_unit({1.0, 0.0, 0.0}); }
    static constexpr UnitVec3 e2() { return from_unit({0.0, 1.0, 0.0}); }
    static constexpr UnitVec3 e3() { return from_unit({0.0, 0.0, 1.0}); }

private:
    static constexpr UnitVec3 from_unit(const Vec3& v) {
        UnitVec3 u;
        u.v_ = v;
        return u;
    }

    Vec3 v_{0.0, 0.0, 1.0};
};

/// Rodrigues rotation of `v` by `angle` about the unit axis `k`
/// (right-handed).
inline Vec3 rotate_about(const Vec3& v, const UnitVec3& k, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Vec3& a = k.vec();
    return v * c + cross(a, v) * s + a * (dot(a, v) * (1.0 - c));
}

/// Angle between two unit vectors, accurate across the whole range [0, pi].
inline double angle_between(const Vec3& a, const Vec3& b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

}  // namespace turnkit
