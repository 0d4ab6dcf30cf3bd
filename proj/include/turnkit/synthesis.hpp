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

// Any SU(2) gate from two quarter-wave plates and one half-wave plate.
//
// With u = u(xi, eta, zeta) and b = -pi/4 + (xi + eta - zeta)/4, as matrix
// products:
//   QQH:  u = Q_{pi/4 + xi/2} Q_{pi/4 + (xi + eta)/2} H_b
//   QHQ:  u = Q_{pi/4 + xi/2} H_b Q_{pi/4 - zeta/2}
//   HQQ:  u = H_b Q_{pi/4 + (eta - zeta)/2} Q_{pi/4 - zeta/2}
// Settings store the plate angles in the order light meets them, i.e. the
// matrix factors read right to left. The same plates also drive NMR: a QWP
// becomes a pi/2 pulse and an HWP a pi pulse, with pulse phase twice the
// plate orientation.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "turnkit/optics.hpp"
#include "turnkit/su2.hpp"

namespace turnkit {

enum class GadgetConfig { QQH, QHQ, HQQ };

inline std::string_view gadget_config_name(GadgetConfig c) {
    switch (c) {
        case GadgetConfig::QQH: return "QQH";
        case GadgetConfig::QHQ: return "QHQ";
        case GadgetConfig::HQQ: return "HQQ";
    }
    return "?";
}

/// Light-order index of the half-wave plate.
inline std::size_t hwp_slot(GadgetConfig c) {
    switch (c) {
        case GadgetConfig::QQH: return 0;
        case GadgetConfig::QHQ: return 1;
        case GadgetConfig::HQQ: return 2;
    }
    return 0;
}

/// Three dial angles in [0, pi), light order. `sign` is +1 when realize()
/// reproduces the gate exactly and -1 when it gives -u.
struct GadgetSetting {
    GadgetConfig config = GadgetConfig::QHQ;
    std::array<double, 3> angles{};
    int sign = 1;
};

enum class PulseFlip { HalfPi, Pi };

inline double flip_angle(PulseFlip f) { return f == PulseFlip::Pi ? kPi : 0.5 * kPi; }

struct PulseElement {
    PulseFlip flip = PulseFlip::HalfPi;
    double phase = 0.0;  // radians in [0, 2pi)
};

/// C_{-pi/4}(eta) = Q_0 Q_{eta/2} H_{pi/2 + eta/4}; light meets the HWP first.
inline ElementStack variable_birefringence_qqh(double eta) {
    return {{PlateElement::make_hwp(0.5 * kPi + 0.25 * eta), PlateElement::make_qwp(0.5 * eta),
             PlateElement::make_qwp(0.0)}};
}

/// C_{-pi/4}(eta) = Q_0 H_{pi/2 + eta/4} Q_0.
inline ElementStack variable_birefringence_qhq(double eta) {
    return {{PlateElement::make_qwp(0.0), PlateElement::make_hwp(0.5 * kPi + 0.25 * eta), PlateElement::make_qwp(0.0)}};
}

inline ElementStack setting_to_stack(const GadgetSetting& s) {
    ElementStack stack;
    const std::size_t h = hwp_slot(s.config);
    for (std::size_t k = 0; k < 3; ++k)
        stack.elements.push_back(k == h ? PlateElement::make_hwp(s.angles[k]) : PlateElement::make_qwp(s.angles[k]));
    return stack;
}

/// The gate of the assembled plates (no sign correction applied).
inline Su2Gate realize(const GadgetSetting& s) { return evaluate_stack(setting_to_stack(s)); }

namespace detail {

inline std::array<double, 3> gadget_angles(const EulerAngles& e, GadgetConfig c) {
    const double q = 0.25 * kPi;
    const double b = -q + 0.25 * (e.xi + e.eta - e.zeta);
    std::array<double, 3> a{};
    switch (c) {
        case GadgetConfig::QQH: a = {b, q + 0.5 * (e.xi + e.eta), q + 0.5 * e.xi}; break;
        case GadgetConfig::QHQ: a = {q - 0.5 * e.zeta, b, q + 0.5 * e.xi}; break;
        case GadgetConfig::HQQ: a = {q - 0.5 * e.zeta, q + 0.5 * (e.eta - e.zeta), b}; break;
    }
    for (double& x : a) x = wrap_positive(x, kPi);
    return a;
}

}  // namespace detail

/// Closed-form plate angles for u in the requested configuration.
inline GadgetSetting synthesize(const Su2Gate& u, GadgetConfig config) {
    GadgetSetting s{config, detail::gadget_angles(to_euler(u), config), 1};
    const Su2Gate r = realize(s);
    s.sign = exact_distance(r, u) <= exact_distance(r, -u) ? 1 : -1;
    return s;
}

/// Universal-gadget dials, light order: (pi/4 - zeta/2, -pi/4 + (xi+eta-zeta)/4,
/// pi/4 + xi/2), each mod pi. Identical to the QHQ synthesis.
inline std::array<double, 3> dial_positions(const Su2Gate& u) {
    return detail::gadget_angles(to_euler(u), GadgetConfig::QHQ);
}

/// Pulses in time order: QWP(phi) -> pi/2 pulse, HWP(phi) -> pi pulse, both
/// with phase 2 phi.
inline std::vector<PulseElement> to_nmr(const GadgetSetting& s) {
    std::vector<PulseElement> pulses;
    const std::size_t h = hwp_slot(s.config);
    for (std::size_t k = 0; k < 3; ++k)
        pulses.push_back({k == h ? PulseFlip::Pi : PulseFlip::HalfPi, wrap_positive(2.0 * s.angles[k], kTwoPi)});
    return pulses;
}

/// exp(-i (flip/2)(cos(phase) tau1 + sin(phase) tau2)).
inline Su2Gate pulse_gate(const PulseElement& p) {
    const double half = 0.5 * flip_angle(p.flip);
    const double s = std::sin(half);
    return Su2Gate::from_unit(std::cos(half), {s * std::cos(p.phase), s * std::sin(p.phase), 0.0});
}

/// Product of the pulse rotations, the latest pulse leftmost.
inline Su2Gate simulate_pulses(const std::vector<PulseElement>& pulses) {
    Su2Gate total;
    for (const PulseElement& p : pulses) total = pulse_gate(p) * total;
    return total;
}

/// Upper bound on the turn length of a stack of n QWPs: n pi/4, capped at pi.
inline double max_reachable_length(int n_qwp) {
    if (n_qwp < 1) throw Error(ErrorCode::OutOfRange, "need at least one plate");
    return std::min(n_qwp * 0.25 * kPi, kPi);
}

}  // namespace turnkit
