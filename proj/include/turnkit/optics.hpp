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

// Jones matrices of lossless polarization elements as SU(2) gates, and the
// plate identities used for gate synthesis.
//
// On the sphere of turns, birefringent plates are vertical turns (QWP length
// pi/4, HWP length pi/2) and optical rotators are equatorial turns. Stacks
// are stored in the order light meets the elements; the matrix product puts
// the last element leftmost.

#pragma once

#include <cmath>
#include <string_view>
#include <utility>
#include <vector>

#include "turnkit/su2.hpp"
#include "turnkit/turns.hpp"

namespace turnkit {

/// C_phi(eta) = cos(eta/2) tau0 - i sin(eta/2) (cos 2phi tau1 + sin 2phi tau2).
inline Su2Gate compensator(double phi, double eta) {
    const double s = std::sin(0.5 * eta);
    return Su2Gate::from_unit(std::cos(0.5 * eta), {s * std::cos(2.0 * phi), s * std::sin(2.0 * phi), 0.0});
}

/// Q_phi = C_phi(pi/2).
inline Su2Gate qwp(double phi) { return compensator(phi, 0.5 * kPi); }

/// H_phi = C_phi(pi) = -i (cos 2phi tau1 + sin 2phi tau2).
inline Su2Gate hwp(double phi) { return compensator(phi, kPi); }

/// Optical rotator R(alpha) = exp(-i alpha/2 tau3); R(2pi) = -tau0.
inline Su2Gate rotator(double alpha) {
    return Su2Gate::from_unit(std::cos(0.5 * alpha), {0.0, 0.0, std::sin(0.5 * alpha)});
}

/// Phi(phi) = exp(-i phi tau3), the physical rotation of an element by phi
/// about the beam: J -> Phi J Phi^-1.
inline Su2Gate physical_rotation(double phi) { return Su2Gate::from_unit(std::cos(phi), {0.0, 0.0, std::sin(phi)}); }

/// eta = delta_n * thickness / wavelength, reduced mod 2pi.
inline double retardance_from_physical(double delta_n, double thickness, double wavelength) {
    if (!(delta_n > 0.0) || !(wavelength > 0.0) || !(thickness >= 0.0))
        throw Error(ErrorCode::NonPositiveInput, "index difference and wavelength must be positive, thickness non-negative");
    return wrap_positive(delta_n * thickness / wavelength, kTwoPi);
}

enum class PlateKind { QWP, HWP, Compensator, Rotator };

inline std::string_view plate_kind_name(PlateKind k) {
    switch (k) {
        case PlateKind::QWP: return "QWP";
        case PlateKind::HWP: return "HWP";
        case PlateKind::Compensator: return "COMPENSATOR";
        case PlateKind::Rotator: return "ROTATOR";
    }
    return "?";
}

/// One optical element. Angles are normalized on construction without
/// changing the gate: plate orientations mod pi, rotations mod 4pi, and
/// compensator retardance into [0, 2pi] using C_phi(eta) = C_{phi+pi/2}(-eta).
struct PlateElement {
    PlateKind kind = PlateKind::QWP;
    double orientation = 0.0;  // fast-axis angle (plates)
    double retardance = 0.0;   // compensators only
    double rotation = 0.0;     // rotators only

    static PlateElement make_qwp(double phi) { return {PlateKind::QWP, wrap_positive(phi, kPi), 0.5 * kPi, 0.0}; }
    static PlateElement make_hwp(double phi) { return {PlateKind::HWP, wrap_positive(phi, kPi), kPi, 0.0}; }
    static PlateElement make_rotator(double alpha) { return {PlateKind::Rotator, 0.0, 0.0, wrap_positive(alpha, 2.0 * kTwoPi)}; }
    static PlateElement make_compensator(double phi, double eta) {
        double e = wrap_positive(eta, 2.0 * kTwoPi);
        if (e > kTwoPi) {
            e = 2.0 * kTwoPi - e;
            phi += 0.5 * kPi;
        }
        return {PlateKind::Compensator, wrap_positive(phi, kPi), e, 0.0};
    }

    Su2Gate gate() const {
        switch (kind) {
            case PlateKind::QWP: return qwp(orientation);
            case PlateKind::HWP: return hwp(orientation);
            case PlateKind::Compensator: return compensator(orientation, retardance);
            case PlateKind::Rotator: return rotator(rotation);
        }
        return {};
    }
};

/// Elements in the order light passes through them.
struct ElementStack {
    std::vector<PlateElement> elements;
};

/// Product of element gates with the last-encountered element leftmost.
inline Su2Gate evaluate_stack(const ElementStack& stack) {
    Su2Gate total;
    for (const PlateElement& e : stack.elements) total = e.gate() * total;
    return total;
}

// --- plate identities -------------------------------------------------------

/// H_{phi_h} Q_{phi_q} = Q_{result} H_{phi_h}, result = 2 phi_h - phi_q mod pi.
inline double hq_commute(double phi_h, double phi_q) { return wrap_positive(2.0 * phi_h - phi_q, kPi); }

/// H_{phi1} H_{phi2} = R(alpha), alpha = 2pi + 4(phi1 - phi2) mod 4pi.
inline double hwp_pair_rotation(double phi1, double phi2) {
    return wrap_positive(kTwoPi + 4.0 * (phi1 - phi2), 2.0 * kTwoPi);
}

enum class RotatorSide {
    Pre,   // light meets the rotator first: H_phi R(alpha) = H_{phi - alpha/4}
    Post,  // light meets the rotator last:  R(alpha) H_phi = H_{phi + alpha/4}
};

/// New HWP orientation after absorbing a rotator on the given side.
inline double absorb_rotation(double phi, double alpha, RotatorSide side) {
    return wrap_positive(side == RotatorSide::Post ? phi + 0.25 * alpha : phi - 0.25 * alpha, kPi);
}

/// A QWP pair turns a rotator into a compensator:
/// C_phi(eta) = Q_{pi/4+phi} R(eta) Q_{-pi/4+phi}.
inline ElementStack rotator_to_birefringence(double phi, double eta) {
    return {{PlateElement::make_qwp(-0.25 * kPi + phi), PlateElement::make_rotator(eta),
             PlateElement::make_qwp(0.25 * kPi + phi)}};
}

// --- positional coordinates ---------------------------------------------------

/// Splits a non-central gate into its equatorial (rotator) and vertical
/// (compensator) parts, read from the representative arc whose tail sits on
/// the equator at azimuth phi1 and whose head has polar/azimuthal
/// coordinates (theta, phi2):
///   u = C_{-pi/4 + phi2/2}(pi - 2 theta) R(2 phi2 - 2 phi1)
///     = R(2 phi2 - 2 phi1) C_{-pi/4 + phi1 - phi2/2}(pi - 2 theta)
struct PositionalDecomposition {
    double theta = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;

    double rotation = 0.0;            // alpha of R(alpha)
    double retardance = 0.0;          // eta of the compensator
    double compensator_after = 0.0;   // phi with u = C_phi(eta) R(alpha)
    double compensator_before = 0.0;  // phi with u = R(alpha) C_phi(eta)
    bool rotator_only = false;        // the turn lies on the equator

    /// Light meets the rotator, then the compensator.
    ElementStack rotator_then_compensator() const {
        return {{PlateElement::make_rotator(rotation), PlateElement::make_compensator(compensator_after, retardance)}};
    }
    /// Light meets the compensator, then the rotator.
    ElementStack compensator_then_rotator() const {
        return {{PlateElement::make_compensator(compensator_before, retardance), PlateElement::make_rotator(rotation)}};
    }
};

inline PositionalDecomposition turn_positional_decomposition(const Su2Gate& u) {
    const Turn t = turn_from_gate(u);
    if (t.central()) throw Error(ErrorCode::CentralGate, "central gates have no unique great circle");
    const Arc arc = representative_arc(t);

    PositionalDecomposition d;
    d.phi1 = arc.tail.azimuth();
    d.theta = arc.head.polar();
    d.phi2 = arc.head.azimuth();
    d.rotation = 2.0 * d.phi2 - 2.0 * d.phi1;
    d.retardance = kPi - 2.0 * d.theta;
    d.compensator_after = -0.25 * kPi + 0.5 * d.phi2;
    d.compensator_before = -0.25 * kPi + d.phi1 - 0.5 * d.phi2;
    d.rotator_only = std::abs(d.retardance) < 1e-12;
    if (d.rotator_only) d.retardance = 0.0;
    return d;
}

/// Euler angles from positional coordinates (tail (pi/2, phi1), head
/// (theta, phi2)); the map is linear.
inline EulerAngles euler_positional_dictionary(double theta, double phi1, double phi2) {
    if (!(theta > 0.0 && theta < kPi)) throw Error(ErrorCode::OutOfRange, "polar angle must lie in (0, pi)");
    return {-0.5 * kPi + phi2, kPi - 2.0 * theta, 0.5 * kPi + phi2 - 2.0 * phi1};
}

/// The turn with tail (pi/2, phi1) and head (theta, phi2).
inline Turn positional_turn(double theta, double phi1, double phi2) {
    return turn_from_arc(UnitVec3::from_spherical(0.5 * kPi, phi1), UnitVec3::from_spherical(theta, phi2));
}

// --- the H.Q family -----------------------------------------------------------

/// H_{phi_h} Q_{phi_q} has a1^2 + a2^2 = 1/2: its turns run from a 45-degree
/// latitude circle to the equator. Returns the angular distance of u from that
/// torus in S^3.
inline double hq_family_distance(const Su2Gate& u) {
    const Vec3& a = u.a();
    return std::abs(std::atan2(std::hypot(a.x, a.y), std::hypot(u.a0(), a.z)) - 0.25 * kPi);
}

/// True iff u = H_{phi_h} Q_{phi_q} for some angles, within `tol`.
inline bool hq_family_member(const Su2Gate& u, double tol = 1e-8) { return hq_family_distance(u) <= tol; }

/// Plate angles (phi_h, phi_q) with H_{phi_h} Q_{phi_q} nearest to u; exact
/// for members of the family.
inline std::pair<double, double> hq_family_angles(const Su2Gate& u) {
    const Vec3& a = u.a();
    const double phi_h = 0.5 * std::atan2(a.y, a.x);
    const double delta = std::atan2(-a.z, -u.a0());  // 2 (phi_h - phi_q)
    return {wrap_positive(phi_h, kPi), wrap_positive(phi_h - 0.5 * delta, kPi)};
}

}  // namespace turnkit
