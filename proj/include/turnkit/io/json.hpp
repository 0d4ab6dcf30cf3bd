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


// JSON forms of the domain values. Angles are radians.
//   gate     [a0, a1, a2, a3]
//   turn     {"axis": [x, y, z], "length": l}
//   arc      {"tail": [..], "head": [..]}
//   state    {"point": [..], "r": 1.0} or {"jones": [[re, im], [re, im]]}
//   polygon  {"vertices": [[..], ...]}
//   plate    {"kind": "QWP", "phi": ..}; COMPENSATOR adds "eta", ROTATOR has "alpha"
//   stack    {"elements": [plate, ...]} in light order
//   setting  {"config": "QHQ", "angles_rad": [..], "sign": 1}
//   pulses   {"pulses": [{"flip": "pi/2", "phase_rad": ..}]}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turnkit/io/format.hpp"
#include "turnkit/optics.hpp"
#include "turnkit/pancharatnam.hpp"
#include "turnkit/poincare.hpp"
#include "turnkit/synthesis.hpp"
#include "turnkit/turns.hpp"

namespace turnkit::io {

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline double number(const Json& j, const char* what) {
    if (!j.is_number()) bad(std::string(what) + " must be a number");
    return j.get<double>();
}

inline std::vector<double> numbers(const Json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n) bad(std::string(what) + " must be an array of " + std::to_string(n) + " numbers");
    std::vector<double> out;
    for (const Json& e : j) out.push_back(number(e, what));
    return out;
}

}  // namespace detail

inline Json to_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }
inline Json to_json(const UnitVec3& v) { return to_json(v.vec()); }

inline Json to_json(const Su2Gate& u) { return Json::array({u.a0(), u.a().x, u.a().y, u.a().z}); }

inline Json to_json(const Turn& t) { return Json{{"axis", to_json(t.axis())}, {"length", t.length()}}; }

inline Json to_json(const Arc& a) { return Json{{"tail", to_json(a.tail)}, {"head", to_json(a.head)}}; }

inline Json to_json(const EulerAngles& e) { return Json{{"xi", e.xi}, {"eta", e.eta}, {"zeta", e.zeta}}; }

inline Json to_json(const AxisAngle& a) {
    return Json{{"axis", to_json(a.axis)}, {"angle", a.angle}, {"degenerate", a.degenerate}};
}

inline Json to_json(const ComplexMatrix2& m) {
    Json rows = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 2; ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(row);
    }
    return rows;
}

inline Json to_json(const PoincarePoint& p) { return Json{{"point", to_json(p.direction)}, {"r", p.radius}}; }

inline Json to_json(const JonesVector& e) {
    return Json{{"jones", Json::array({Json::array({e.e1().real(), e.e1().imag()}),
                                       Json::array({e.e2().real(), e.e2().imag()})})}};
}

inline Json to_json(const SphericalPolygon& p) {
    Json v = Json::array();
    for (const UnitVec3& x : p.vertices()) v.push_back(to_json(x));
    return Json{{"vertices", v}};
}

inline Json to_json(const PlateElement& e) {
    Json j{{"kind", std::string(plate_kind_name(e.kind))}};
    switch (e.kind) {
        case PlateKind::QWP:
        case PlateKind::HWP: j["phi"] = e.orientation; break;
        case PlateKind::Compensator:
            j["phi"] = e.orientation;
            j["eta"] = e.retardance;
            break;
        case PlateKind::Rotator: j["alpha"] = e.rotation; break;
    }
    return j;
}

inline Json to_json(const ElementStack& s) {
    Json els = Json::array();
    for (const PlateElement& e : s.elements) els.push_back(to_json(e));
    return Json{{"elements", els}};
}

inline Json to_json(const GadgetSetting& s) {
    return Json{{"config", std::string(gadget_config_name(s.config))},
                {"angles_rad", Json::array({s.angles[0], s.angles[1], s.angles[2]})},
                {"sign", s.sign}};
}

inline Json to_json(const std::vector<PulseElement>& pulses) {
    Json arr = Json::array();
    for (const PulseElement& p : pulses)
        arr.push_back(Json{{"flip", p.flip == PulseFlip::Pi ? "pi" : "pi/2"}, {"phase_rad", p.phase}});
    return Json{{"pulses", arr}};
}

// --- readers ----------------------------------------------------------------

inline Vec3 vec_from_json(const Json& j) {
    const auto v = detail::numbers(j, 3, "vector");
    return {v[0], v[1], v[2]};
}

inline UnitVec3 unit_from_json(const Json& j) { return UnitVec3(vec_from_json(j)); }

inline Su2Gate gate_from_json(const Json& j) {
    const auto v = detail::numbers(j, 4, "gate");
    return gate_from_components(v[0], {v[1], v[2], v[3]});
}

inline Turn turn_from_json(const Json& j) {
    return Turn::from_axis_length(unit_from_json(detail::field(j, "axis")),
                                  detail::number(detail::field(j, "length"), "length"));
}

inline Arc arc_from_json(const Json& j) {
    return {unit_from_json(detail::field(j, "tail")), unit_from_json(detail::field(j, "head"))};
}

/// A state given either as a sphere point (with optional "r") or as a Jones
/// vector; the Jones form is kept when present.
struct StateInput {
    PoincarePoint point;
    std::optional<JonesVector> jones;
};

inline StateInput state_from_json(const Json& j) {
    if (j.is_object() && j.contains("jones")) {
        const Json& a = j.at("jones");
        if (!a.is_array() || a.size() != 2) detail::bad("jones must hold two [re, im] pairs");
        const auto c1 = detail::numbers(a[0], 2, "jones component");
        const auto c2 = detail::numbers(a[1], 2, "jones component");
        JonesVector e(Complex(c1[0], c1[1]), Complex(c2[0], c2[1]));
        return {PoincarePoint(point_from_jones(e)), e};
    }
    const UnitVec3 dir = unit_from_json(detail::field(j, "point"));
    const double r = j.contains("r") ? detail::number(j.at("r"), "r") : 1.0;
    return {PoincarePoint(dir, r), std::nullopt};
}

inline SphericalPolygon polygon_from_json(const Json& j) {
    const Json& v = detail::field(j, "vertices");
    if (!v.is_array()) detail::bad("vertices must be an array");
    std::vector<UnitVec3> pts;
    for (const Json& p : v) pts.push_back(unit_from_json(p));
    return SphericalPolygon(std::move(pts));
}

inline PlateElement plate_from_json(const Json& j) {
    const Json& k = detail::field(j, "kind");
    if (!k.is_string()) detail::bad("kind must be a string");
    const std::string kind = k.get<std::string>();
    if (kind == "QWP") return PlateElement::make_qwp(detail::number(detail::field(j, "phi"), "phi"));
    if (kind == "HWP") return PlateElement::make_hwp(detail::number(detail::field(j, "phi"), "phi"));
    if (kind == "COMPENSATOR")
        return PlateElement::make_compensator(detail::number(detail::field(j, "phi"), "phi"),
                                              detail::number(detail::field(j, "eta"), "eta"));
    if (kind == "ROTATOR") return PlateElement::make_rotator(detail::number(detail::field(j, "alpha"), "alpha"));
    detail::bad("unknown plate kind \"" + kind + "\"");
}

inline ElementStack stack_from_json(const Json& j) {
    const Json& els = detail::field(j, "elements");
    if (!els.is_array()) detail::bad("elements must be an array");
    ElementStack s;
    for (const Json& e : els) s.elements.push_back(plate_from_json(e));
    return s;
}

/// Parses text, mapping syntax errors to ParseError.
inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace turnkit::io
