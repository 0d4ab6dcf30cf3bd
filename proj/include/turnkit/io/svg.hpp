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


// Static SVG pictures of the sphere of turns: orthographic projection onto a
// 400x400 canvas, arcs sampled at 1-degree steps or finer, the far
// hemisphere dashed. Output depends only on the input.

#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "turnkit/pancharatnam.hpp"
#include "turnkit/turns.hpp"

namespace turnkit::io {

/// Viewing direction (points toward the viewer). The default looks down on
/// the north pole with e1 to the right and e2 up.
struct Projection {
    UnitVec3 view = UnitVec3::e3();

    static Projection orthographic_north() { return {}; }
    static Projection orthographic_custom(const UnitVec3& view) { return {view}; }
};

struct DiagramObject {
    enum class Kind { Turn, Arc, Polygon };
    Kind kind = Kind::Arc;
    Arc arc{};                               // Turn (its representative) or Arc
    std::vector<UnitVec3> vertices;          // Polygon
    bool whole_circle = false;               // also trace the arc's great circle
};

inline DiagramObject diagram_turn(const Turn& t) {
    DiagramObject o;
    o.kind = DiagramObject::Kind::Turn;
    o.arc = representative_arc(t);
    o.whole_circle = !t.central();
    return o;
}

inline DiagramObject diagram_arc(const Arc& a) {
    DiagramObject o;
    o.arc = a;
    return o;
}

inline DiagramObject diagram_polygon(const SphericalPolygon& p) {
    DiagramObject o;
    o.kind = DiagramObject::Kind::Polygon;
    o.vertices.assign(p.vertices().begin(), p.vertices().end());
    return o;
}

namespace detail {

inline constexpr double kCanvas = 400.0;
inline constexpr double kCenter = 200.0;
inline constexpr double kRadius = 180.0;
inline constexpr double kStep = kPi / 180.0;

inline std::string coord(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

class Canvas {
public:
    explicit Canvas(const Projection& p) : view_(p.view.vec()) {
        const Vec3 r = cross(Vec3{0.0, 0.0, 1.0}, view_);
        right_ = norm(r) > 1e-9 ? r / norm(r) : Vec3{1.0, 0.0, 0.0};
        if (norm(r) <= 1e-9 && view_.z < 0.0) right_ = Vec3{-1.0, 0.0, 0.0};
        up_ = cross(view_, right_);
    }

    bool visible(const Vec3& p) const { return dot(p, view_) >= 0.0; }
    double sx(const Vec3& p) const { return kCenter + kRadius * dot(p, right_); }
    double sy(const Vec3& p) const { return kCenter - kRadius * dot(p, up_); }
    std::string point(const Vec3& p) const { return coord(sx(p)) + "," + coord(sy(p)); }

    /// Polyline runs along a sampled path, split where visibility changes.
    void path(const std::vector<Vec3>& pts, const char* color, double width, std::string& out) const {
        std::size_t k = 0;
        while (k < pts.size()) {
            const bool vis = visible(pts[k]);
            std::size_t j = k;
            while (j + 1 < pts.size() && visible(pts[j + 1]) == vis) ++j;
            // Share the boundary sample so runs connect.
            const std::size_t stop = j + 1 < pts.size() ? j + 1 : j;
            if (stop > k) {
                out += "  <polyline fill=\"none\" stroke=\"";
                out += color;
                out += "\" stroke-width=\"" + coord(width) + "\"";
                if (!vis) out += " stroke-dasharray=\"4,3\"";
                out += " points=\"";
                for (std::size_t i = k; i <= stop; ++i) {
                    if (i > k) out += ' ';
                    out += point(pts[i]);
                }
                out += "\"/>\n";
            }
            k = j + 1;
        }
    }

    void dot_marker(const Vec3& p, const char* color, std::string& out) const {
        out += "  <circle cx=\"" + coord(sx(p)) + "\" cy=\"" + coord(sy(p)) + "\" r=\"3.00\" fill=\"" + color + "\"";
        if (!visible(p)) out += " fill-opacity=\"0.4\"";
        out += "/>\n";
    }

    /// Arrowhead at `tip`, pointing along the screen direction from `from`.
    void arrow(const Vec3& from, const Vec3& tip, const char* color, std::string& out) const {
        const double dx = sx(tip) - sx(from);
        const double dy = sy(tip) - sy(from);
        const double len = std::hypot(dx, dy);
        if (len < 1e-6) return;
        const double ux = dx / len, uy = dy / len;
        const double bx = sx(tip) - 10.0 * ux, by = sy(tip) - 10.0 * uy;
        out += "  <polygon fill=\"";
        out += color;
        out += "\" points=\"" + coord(sx(tip)) + "," + coord(sy(tip)) + " " + coord(bx - 4.0 * uy) + "," +
               coord(by + 4.0 * ux) + " " + coord(bx + 4.0 * uy) + "," + coord(by - 4.0 * ux) + "\"/>\n";
    }

private:
    Vec3 view_;
    Vec3 right_;
    Vec3 up_;
};

/// Samples of the minor arc a -> b (a, b not antipodal), at most 1 degree apart.
inline std::vector<Vec3> sample_arc(const UnitVec3& a, const UnitVec3& b) {
    const double theta = angle_between(a, b);
    const Vec3 k = cross(a, b);
    if (norm(k) < 1e-12) return {a.vec()};
    const UnitVec3 axis(k);
    const int n = std::max(1, static_cast<int>(std::ceil(theta / kStep - 1e-9)));
    std::vector<Vec3> pts;
    for (int i = 0; i <= n; ++i) pts.push_back(rotate_about(a, axis, theta * i / n));
    return pts;
}

/// The full great circle orthogonal to `axis`, started at a point fixed by the
/// circle alone so that every arc on it draws the same trace.
inline std::vector<Vec3> sample_circle(const UnitVec3& axis) {
    const Vec3 node = cross(Vec3{0.0, 0.0, 1.0}, axis.vec());
    const UnitVec3 start = norm(node) > 1e-9 ? UnitVec3(node) : UnitVec3::e1();
    std::vector<Vec3> pts;
    for (int i = 0; i <= 360; ++i) pts.push_back(rotate_about(start, axis, kStep * i));
    return pts;
}

}  // namespace detail

inline std::string render_svg(const std::vector<DiagramObject>& objects, const Projection& projection = {}) {
    using namespace detail;
    const Canvas canvas(projection);
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
    out += "  <rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
    out += "  <circle cx=\"200.00\" cy=\"200.00\" r=\"180.00\" fill=\"none\" stroke=\"black\" stroke-width=\"1.00\"/>\n";

    static const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    std::size_t index = 0;
    for (const DiagramObject& o : objects) {
        const char* color = kPalette[index++ % std::size(kPalette)];
        if (o.kind == DiagramObject::Kind::Polygon) {
            const std::size_t n = o.vertices.size();
            for (std::size_t k = 0; k < n; ++k) {
                const UnitVec3& a = o.vertices[k];
                const UnitVec3& b = o.vertices[(k + 1) % n];
                if (dot(a, b) < -1.0 + 1e-12) continue;
                const auto pts = sample_arc(a, b);
                canvas.path(pts, color, 1.5, out);
                if (pts.size() >= 2) canvas.arrow(pts[pts.size() - 2], pts.back(), color, out);
            }
            for (const UnitVec3& v : o.vertices) canvas.dot_marker(v, color, out);
            continue;
        }
        const Arc& a = o.arc;
        const Vec3 k = cross(a.tail, a.head);
        if (o.whole_circle && norm(k) > 1e-12) canvas.path(sample_circle(UnitVec3(k)), "#cccccc", 0.75, out);
        canvas.dot_marker(a.tail, color, out);
        if (dot(a.tail, a.head) < -1.0 + 1e-12 || norm(k) < 1e-12) {
            canvas.dot_marker(a.head, color, out);
            continue;
        }
        const auto pts = sample_arc(a.tail, a.head);
        canvas.path(pts, color, 2.0, out);
        canvas.arrow(pts[pts.size() - 2], pts.back(), color, out);
    }
    out += "</svg>\n";
    return out;
}

}  // namespace turnkit::io
