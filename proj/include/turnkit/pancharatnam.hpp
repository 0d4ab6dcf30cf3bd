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

// Geometric phase on the Poincare sphere.
//
// Sign convention: a polygon traversed counterclockwise as seen from outside
// the sphere has positive oriented area. The Bargmann invariant
//     Delta_n = 2 arg( <E1,E2> <E2,E3> ... <En,E1> )
// defines this sign and polygon_area agrees with it. Transporting a state in
// phase around a closed geodesic polygon of oriented area A multiplies it by
// e^{-i A/2}.

#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "turnkit/poincare.hpp"
#include "turnkit/turns.hpp"

namespace turnkit {

inline constexpr double kDegenerateTol = 1e-9;

/// Closed geodesic polygon; consecutive vertices (cyclically) are neither
/// equal nor antipodal, so every side is a minor arc shorter than pi.
class SphericalPolygon {
public:
    explicit SphericalPolygon(std::vector<UnitVec3> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.size() < 3) throw Error(ErrorCode::DegenerateTriple, "a polygon needs at least three vertices");
        for (std::size_t k = 0; k < vertices_.size(); ++k) {
            const double ang = angle_between(vertices_[k], vertices_[(k + 1) % vertices_.size()]);
            if (ang < kDegenerateTol || ang > kPi - kDegenerateTol)
                throw Error(ErrorCode::DegenerateTriple, "consecutive polygon vertices are equal or antipodal");
        }
    }

    std::span<const UnitVec3> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const UnitVec3& operator[](std::size_t k) const { return vertices_[k % vertices_.size()]; }

private:
    std::vector<UnitVec3> vertices_;
};

/// Midpoint of the minor arc between two non-antipodal points.
inline UnitVec3 geodesic_midpoint(const UnitVec3& a, const UnitVec3& b) { return UnitVec3(a.vec() + b.vec()); }

/// Pancharatnam's criterion: in phase iff <E1, E2> is real and positive.
inline bool in_phase(const JonesVector& a, const JonesVector& b) {
    const Complex z = inner_product(a, b);
    const double mag = std::abs(z);
    if (mag <= 1e-9) throw Error(ErrorCode::OrthogonalStates, "phase comparison of orthogonal states is undefined");
    return std::abs(z.imag()) <= 1e-9 * mag && z.real() > 0.0;
}

namespace detail {

inline double bargmann3_unchecked(const UnitVec3& m1, const UnitVec3& m2, const UnitVec3& m3) {
    const Complex tr =
        (density_from_point(m1).m * density_from_point(m2).m * density_from_point(m3).m).trace();
    if (std::abs(tr) < 1e-18) throw Error(ErrorCode::DegenerateTriple, "triple contains an antipodal pair");
    return 2.0 * std::arg(tr);
}

}  // namespace detail

/// Delta_3 = 2 arg tr(rho1 rho2 rho3), in (-2pi, 2pi]; equals the oriented
/// area of the geodesic triangle.
inline double bargmann3(const UnitVec3& m1, const UnitVec3& m2, const UnitVec3& m3) {
    const std::pair<const UnitVec3*, const UnitVec3*> pairs[] = {{&m1, &m2}, {&m2, &m3}, {&m3, &m1}};
    for (const auto& [p, q] : pairs) {
        const double ang = angle_between(*p, *q);
        if (ang < kDegenerateTol || ang > kPi - kDegenerateTol)
            throw Error(ErrorCode::DegenerateTriple, "triple has coincident or antipodal points");
    }
    return detail::bargmann3_unchecked(m1, m2, m3);
}

/// Fan decomposition sum_k Delta_3(v1, vk, vk+1). Each term lies in
/// (-2pi, 2pi], so the total lies in (-2pi n, 2pi n).
inline double bargmann_n(const SphericalPolygon& poly) {
    double total = 0.0;
    for (std::size_t k = 1; k + 1 < poly.size(); ++k) total += detail::bargmann3_unchecked(poly[0], poly[k], poly[k + 1]);
    return total;
}

/// 2 arg of the cyclic product of inner products of the given states. Gauge
/// invariant: every vector enters once as a bra and once as a ket.
inline double bargmann_from_states(std::span<const JonesVector> states) {
    Complex prod(1.0, 0.0);
    for (std::size_t k = 0; k < states.size(); ++k) prod *= inner_product(states[k], states[(k + 1) % states.size()]);
    if (std::abs(prod) < 1e-18) throw Error(ErrorCode::OrthogonalStates, "cyclic product vanishes");
    return 2.0 * std::arg(prod);
}

/// Oriented area as spherical excess: interior angles summed minus (n-2)pi.
/// Interior angles are taken on the left of the direction of travel, and the
/// result is mapped into (-2pi, 2pi] so that reversing the vertex order flips
/// the sign.
inline double polygon_area(const SphericalPolygon& poly) {
    const std::size_t n = poly.size();
    double angle_sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Vec3& v = poly[k].vec();
        const Vec3& prev = poly[k + n - 1].vec();
        const Vec3& next = poly[k + 1].vec();
        const Vec3 to_prev = prev - v * dot(prev, v);
        const Vec3 to_next = next - v * dot(next, v);
        // Counterclockwise about the outward normal v, from to_next to to_prev.
        double interior = std::atan2(dot(v, cross(to_next, to_prev)), dot(to_next, to_prev));
        if (interior < 0.0) interior += kTwoPi;
        angle_sum += interior;
    }
    double area = angle_sum - static_cast<double>(n - 2) * kPi;
    if (area > kTwoPi) area -= 2.0 * kTwoPi;
    return area;
}

/// Composes the half-side turns (first vertex to the midpoint of its side,
/// for each side in order). The result is T(v1, area / 2).
inline Turn midpoint_turn(const SphericalPolygon& poly) {
    Turn total;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Turn half = turn_from_arc(poly[k], geodesic_midpoint(poly[k], poly[k + 1]));
        total = compose_turns(total, half);
    }
    return total;
}

/// Drives E along the geodesic from its own point to `target` with the turn
/// whose axis is orthogonal to both points and whose length is half their
/// separation. Successive states stay in phase. A target equal to the
/// current point leaves E unchanged.
inline JonesVector in_phase_transport(const JonesVector& e, const UnitVec3& target) {
    const UnitVec3 source = point_from_jones(e);
    const double ang = angle_between(source, target);
    if (ang > kPi - kDegenerateTol)
        throw Error(ErrorCode::AntipodalTransport, "the geodesic to an antipodal point is undefined");
    if (ang < 1e-15) return e;
    const Turn half = turn_from_arc(source, geodesic_midpoint(source, target));
    return apply_gate(gate_from_turn(half), e);
}

/// In-phase transport of E (which should sit at poly[0]) through every vertex
/// in order and back to the start.
inline JonesVector in_phase_circuit(const JonesVector& e, const SphericalPolygon& poly) {
    JonesVector state = e;
    for (std::size_t k = 1; k <= poly.size(); ++k) state = in_phase_transport(state, poly[k]);
    return state;
}

}  // namespace turnkit
