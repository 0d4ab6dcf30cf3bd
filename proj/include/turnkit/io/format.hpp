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


// Byte-stable text output: numbers at 9 significant digits with negative
// zero printed as 0, and a JSON writer that uses that formatting.

#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace turnkit::io {

using Json = nlohmann::ordered_json;

inline std::string format_number(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

namespace detail {

inline void write_json(const Json& j, std::string& out, int indent, int depth) {
    const auto newline = [&](int d) {
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += ": ";
                write_json(it.value(), out, indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            // Arrays of scalars stay on one line.
            bool flat = true;
            for (const Json& e : j) flat = flat && !e.is_structured();
            out += '[';
            bool first = true;
            for (const Json& e : j) {
                if (!first) out += flat ? ", " : ",";
                first = false;
                if (!flat) newline(depth + 1);
                write_json(e, out, indent, depth + 1);
            }
            if (!flat && !j.empty()) newline(depth);
            out += ']';
            return;
        }
        case Json::value_t::number_float: out += format_number(j.get<double>()); return;
        default: out += j.dump(); return;
    }
}

}  // namespace detail

/// Pretty-printed JSON with a trailing newline.
inline std::string dump_json(const Json& j, int indent = 2) {
    std::string out;
    detail::write_json(j, out, indent, 0);
    out += '\n';
    return out;
}

}  // namespace turnkit::io
