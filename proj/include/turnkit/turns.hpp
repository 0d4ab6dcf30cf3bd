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

// Hamilton's turns: equivalence classes of directed great-circle arcs under
// sliding along their great circle. A turn T(n, l) with axis n and length
// l in [0, pi] corresponds to the gate cos(l) tau0 - i sin(l) n . tau, and an
// arc from tail n1 to head n2 to the gate n1.n2 - i (n1 ^ n2) . tau.
//
// Composition is done with spherical geometry alone: the two arcs are slid
// until the head of the first meets the tail of the second at a crossing of
// their great circles, and the result is the arc from the free tail to the
// free head. Summands read left to right correspond to matrix factors read
// right to left, so compose_turns(s, t) represents gate(t) * gate(s).

#pragma once

#include <cassert>
#include <cmath>

#include "turnkit/su2.hpp"
#include "turnkit/vec3.hpp"

namespace turnkit {

inline constexpr double kCentralTol = 1e-9;

class Turn {
public:
    /// The null turn (identity gate).
    Turn() = default;

    /// T(axis, length) for any real length; reduced into [0, pi] through
    /// T(n, pi + a) = T(-n, pi - a).
    static Turn from_axis_length(const UnitVec3& axis, double length);

    const UnitVec3& axis() const { return axis_; }
    double length() const { return length_; }
    /// Set iff length is 0 or pi; the axis is then (0,0,1) by convention.
    bool central() const { return central_; }

private:
    friend Turn turn_from_gate(const Su2Gate& u);

    Turn(const UnitVec3& axis, double length, bool central) : axis_(axis), length_(length), central_(central) {}

    UnitVec3 axis_ = UnitVec3::e3();
    double length_ = 0.0;
    bool central_ = true;
};

/// Directed great-circle arc; one representative of a turn.
struct Arc {
    UnitVec3 tail;
    UnitVec3 head;
};

inline Turn turn_from_gate(const Su2Gate& u) {
    const double s = norm(u.a());
    const double length = std::atan2(s, u.a0());
    if (length < kCentralTol) return Turn(UnitVec3::e3(), 0.0, true);
    if (length > kPi - kCentralTol) return Turn(UnitVec3::e3(), kPi, true);
    return Turn(UnitVec3(u.a() / s), length, false);
}

inline Su2Gate gate_from_turn(const Turn& t) {
    return Su2Gate::from_unit(std::cos(t.length()), t.axis().vec() * std::sin(t.length()));
}

inline Turn Turn::from_axis_length(const UnitVec3& axis, double length) {
    return turn_from_gate(Su2Gate::from_unit(std::cos(length), axis.vec() * std::sin(length)));
}

inline Turn null_turn() { return Turn(); }

/// Distance between the gates of two turns (turns fix the sign).
inline double turn_distance(const Turn& s, const Turn& t) { return exact_distance(gate_from_turn(s), gate_from_turn(t)); }

/// Turn of the arc tail -> head. Throws AntipodalPair when the endpoints are
/// antipodal: the turn is then -tau0 but the great circle is undefined.
inline Turn turn_from_arc(const UnitVec3& tail, const UnitVec3& head) {
    const double c = dot(tail, head);
    if (c < -1.0 + 1e-12)
        throw Error(ErrorCode::AntipodalPair, "tail and head are antipodal; the great circle is undefined");
    return turn_from_gate(Su2Gate::from_unit(c, cross(tail, head)));
}

inline Turn turn_from_arc(const Arc& arc) { return turn_from_arc(arc.tail, arc.head); }

/// Representative arc whose tail sits on the equator z = 0, at the node where
/// the arc ascends into the northern hemisphere. Rotator turns (axis +-z)
/// anchor the tail at azimuth 0. Central turns give (e1, +-e1).
inline Arc representative_arc(const Turn& t) {
    if (t.central()) return t.length() == 0.0 ? Arc{UnitVec3::e1(), UnitVec3::e1()} : Arc{UnitVec3::e1(), -UnitVec3::e1()};
    const Vec3& n = t.axis().vec();
    const Vec3 node = cross(Vec3{0.0, 0.0, 1.0}, n);
    const UnitVec3 tail = norm(node) > 1e-12 ? UnitVec3(node) : UnitVec3::e1();
    const Vec3 head = tail.vec() * std::cos(t.length()) + cross(n, tail.vec()) * std::sin(t.length());
    return {tail, UnitVec3(head)};
}

/// Rigidly slides an arc along its own great circle by `delta`.
inline Arc slide_arc(const Arc& arc, double delta) {
    const Vec3 k = cross(arc.tail, arc.head);
    if (norm(k) < 1e-12) throw Error(ErrorCode::DegenerateArc, "arc endpoints are equal or antipodal");
    const UnitVec3 axis(k);
    return {UnitVec3(rotate_about(arc.tail, axis, delta)), UnitVec3(rotate_about(arc.head, axis, delta))};
}

/// Reversed turn: endpoints swapped, gate inverted.
inline Turn reverse(const Turn& t) {
    if (t.central()) return t;
    return Turn::from_axis_length(-t.axis(), t.length());
}

namespace detail {

/// Closest point to `p` on the great circle orthogonal to `axis`.
inline UnitVec3 onto_great_circle(const UnitVec3& p, const UnitVec3& axis) {
    return UnitVec3(p.vec() - axis.vec() * dot(p, axis));
}

}  // namespace detail

/// Geometric composition through a caller-chosen crossing point of the two
/// great circles. The first arc is slid so its head lands on `crossing`, the
/// second so its tail does. Both turns must be non-central and non-coaxial.
inline Turn compose_turns_at(const Turn& first, const Turn& second, const UnitVec3& crossing) {
    // Projecting separately onto each circle keeps the construction exact to
    // rounding even when the circles cross at a tiny angle.
    const UnitVec3 meet1 = detail::onto_great_circle(crossing, first.axis());
    const UnitVec3 meet2 = detail::onto_great_circle(crossing, second.axis());
    const Vec3 free_tail = rotate_about(meet1, first.axis(), -first.length());
    const Vec3 free_head = rotate_about(meet2, second.axis(), second.length());
    const UnitVec3 tail(free_tail);
    const UnitVec3 head(free_head);
    return turn_from_gate(Su2Gate::from_unit(dot(tail, head), cross(tail, head)));
}

/// Turn addition: the result represents gate(second) * gate(first).
inline Turn compose_turns(const Turn& first, const Turn& second) {
    if (first.central()) {
        return first.length() == 0.0 ? second : turn_from_gate(-gate_from_turn(second));
    }
    if (second.central()) {
        return second.length() == 0.0 ? first : turn_from_gate(-gate_from_turn(first));
    }
    const Vec3 c = cross(first.axis(), second.axis());
    const double s = norm(c);
    if (s == 0.0) {
        // Exactly parallel axes: lengths add along the shared axis.
        const double sign = dot(first.axis(), second.axis()) > 0.0 ? 1.0 : -1.0;
        return Turn::from_axis_length(first.axis(), first.length() + sign * second.length());
    }
    const UnitVec3 crossing(c / s);
    Turn result = compose_turns_at(first, second, crossing);
#ifndef NDEBUG
    // The other crossing must give the same turn.
    assert(turn_distance(result, compose_turns_at(first, second, -crossing)) < 1e-8);
#endif
    return result;
}

/// Algebraic counterpart of compose_turns, through quaternion multiplication.
inline Turn compose_turns_algebraic(const Turn& first, const Turn& second) {
    return turn_from_gate(gate_from_turn(second) * gate_from_turn(first));
}

/// The commutator [v, u] = v^-1 u^-1 v u built purely from turns: the sum
/// (u + v) followed by the reverse of (v + u).
inline Turn commutator_turn(const Turn& v, const Turn& u) {
    return compose_turns(compose_turns(u, v), reverse(compose_turns(v, u)));
}

/// SO(3) representative: a turn of length l and the reversed turn of length
/// pi - l are identified, so lengths land in [0, pi/2].
inline Turn so3_canonicalize(const Turn& t) {
    if (t.length() <= 0.5 * kPi) return t;
    return Turn::from_axis_length(-t.axis(), kPi - t.length());
}

}  // namespace turnkit
