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


// The subcommands of the turnkit tool as functions from parsed inputs to
// JSON (or SVG text). Each one only calls library operations.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "turnkit/io/gate_spec.hpp"
#include "turnkit/io/json.hpp"
#include "turnkit/io/svg.hpp"
#include "turnkit/turnkit.hpp"

namespace turnkit::cli {

using io::Json;

/// `point:x,y,z[,r]` or `jones:re1,im1,re2,im2`.
inline io::StateInput parse_state_spec(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw io::SpecParseError(text.size(), "expected \"point:\" or \"jones:\"");
    const std::string_view kind = text.substr(0, colon);
    const auto fields = io::detail::split_fields(text.substr(colon + 1), colon + 1);
    if (kind == "point") {
        const std::size_t n = fields.size() == 4 ? 4 : 3;
        const auto v = io::detail::parse_reals(fields, 0, n, text.size());
        return {PoincarePoint(UnitVec3(Vec3{v[0], v[1], v[2]}), n == 4 ? v[3] : 1.0), std::nullopt};
    }
    if (kind == "jones") {
        const auto v = io::detail::parse_reals(fields, 0, 4, text.size());
        const JonesVector e(Complex(v[0], v[1]), Complex(v[2], v[3]));
        return {PoincarePoint(point_from_jones(e)), e};
    }
    throw io::SpecParseError(0, "unknown state kind \"" + std::string(kind) + "\"");
}

inline GadgetConfig parse_config(std::string_view s) {
    if (s == "qqh" || s == "QQH") return GadgetConfig::QQH;
    if (s == "qhq" || s == "QHQ") return GadgetConfig::QHQ;
    if (s == "hqq" || s == "HQQ") return GadgetConfig::HQQ;
    throw Error(ErrorCode::ParseError, "unknown configuration \"" + std::string(s) + "\"");
}

inline Json convert(const Su2Gate& u, std::string_view to) {
    Json out{{"gate", io::to_json(u)}};
    if (to == "euler") out["euler"] = io::to_json(to_euler(u));
    else if (to == "axis-angle") out["axis_angle"] = io::to_json(to_axis_angle(u));
    else if (to == "quat") out["quat"] = io::to_json(u);
    else if (to == "matrix") out["matrix"] = io::to_json(u.to_matrix());
    else if (to == "turn") out["turn"] = io::to_json(turn_from_gate(u));
    else throw Error(ErrorCode::ParseError, "unknown target \"" + std::string(to) + "\"");
    return out;
}

enum class ComposeMethod { Geometric, Algebraic };

/// Gates in the order they act; the first listed acts first.
inline Json compose(const std::vector<Su2Gate>& gates, ComposeMethod method, bool verify) {
    Turn geometric;
    Turn algebraic;
    for (const Su2Gate& g : gates) {
        const Turn t = turn_from_gate(g);
        geometric = compose_turns(geometric, t);
        algebraic = compose_turns_algebraic(algebraic, t);
    }
    const Turn& chosen = method == ComposeMethod::Geometric ? geometric : algebraic;
    Json out{{"method", method == ComposeMethod::Geometric ? "geometric" : "algebraic"},
             {"gate", io::to_json(gate_from_turn(chosen))},
             {"turn", io::to_json(chosen)}};
    if (verify) {
        const double d = turn_distance(geometric, algebraic);
        out["verify"] = Json{{"geometric", io::to_json(geometric)},
                             {"algebraic", io::to_json(algebraic)},
                             {"distance", d},
                             {"agree", d <= 1e-9}};
    }
    return out;
}

inline Json synthesize(const Su2Gate& u, GadgetConfig config, bool nmr) {
    const GadgetSetting s = turnkit::synthesize(u, config);
    Json out{{"setting", io::to_json(s)}, {"realized", io::to_json(realize(s))}};
    if (nmr) out["nmr"] = io::to_json(to_nmr(s));
    return out;
}

inline Json gadget(const Su2Gate& u, bool degrees) {
    const auto d = dial_positions(u);
    Json out{{"euler", io::to_json(to_euler(u))}, {"dials_rad", Json::array({d[0], d[1], d[2]})}};
    if (degrees) {
        const double k = 180.0 / kPi;
        out["dials_deg"] = Json::array({d[0] * k, d[1] * k, d[2] * k});
    }
    return out;
}

inline Json act(const Turn& t, const io::StateInput& state) {
    Json out = io::to_json(apply_turn(t, state.point));
    if (state.jones) out.update(io::to_json(apply_gate(gate_from_turn(t), *state.jones)));
    return out;
}

inline Json phase(const SphericalPolygon& poly) {
    return Json{{"area", polygon_area(poly)}, {"bargmann", bargmann_n(poly)}, {"midpoint_turn", io::to_json(midpoint_turn(poly))}};
}

inline Json stack(const ElementStack& s) {
    const Su2Gate g = evaluate_stack(s);
    return Json{{"gate", io::to_json(g)}, {"turn", io::to_json(turn_from_gate(g))}};
}

/// Scene file: {"projection": "orthographic-north" | {"view": [x, y, z]},
///              "objects": [{"turn": ..} | {"arc": ..} | {"polygon": ..}]}
inline std::string diagram(const Json& scene) {
    io::Projection proj;
    if (scene.is_object() && scene.contains("projection")) {
        const Json& p = scene.at("projection");
        if (p.is_string() && p.get<std::string>() == "orthographic-north") proj = io::Projection::orthographic_north();
        else if (p.is_object()) proj = io::Projection::orthographic_custom(io::unit_from_json(io::detail::field(p, "view")));
        else throw Error(ErrorCode::ParseError, "unknown projection");
    }
    std::vector<io::DiagramObject> objects;
    if (scene.is_object() && scene.contains("objects")) {
        const Json& list = scene.at("objects");
        if (!list.is_array()) throw Error(ErrorCode::ParseError, "objects must be an array");
        for (const Json& o : list) {
            if (o.contains("turn")) objects.push_back(io::diagram_turn(io::turn_from_json(o.at("turn"))));
            else if (o.contains("arc")) objects.push_back(io::diagram_arc(io::arc_from_json(o.at("arc"))));
            else if (o.contains("polygon")) objects.push_back(io::diagram_polygon(io::polygon_from_json(o.at("polygon"))));
            else throw Error(ErrorCode::ParseError, "object must hold a turn, arc or polygon");
        }
    }
    return io::render_svg(objects, proj);
}

}  // namespace turnkit::cli
