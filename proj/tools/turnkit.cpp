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


// turnkit: command-line front end. Exit status 0 on success, 1 on usage
// errors, 2 on domain errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "turnkit/cli/commands.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kDomain = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

turnkit::Turn parse_turn(const std::string& text, bool degrees) {
    if (!text.empty() && text.front() == '{') return turnkit::io::turn_from_json(turnkit::io::parse_json(text));
    return turnkit::turn_from_gate(turnkit::io::parse_gate_spec(text, degrees));
}

}  // namespace

int main(int argc, char** argv) {
    using namespace turnkit;
    CLI::App app{"Hamilton's turns for SU(2): conversion, composition, geometric phase and wave-plate synthesis"};
    app.require_subcommand(1);
    bool degrees = false;
    app.add_flag("--degrees", degrees, "read angles in gate specs as degrees");

    std::string from, to, gate_text, config_text, turn_text, state_text, file, in_path, out_path;
    std::vector<std::string> specs;
    bool geometric = false, algebraic = false, verify = false, nmr = false;

    auto* convert = app.add_subcommand("convert", "convert a gate between parametrizations");
    convert->add_option("--from", from, "gate spec")->required();
    convert->add_option("--to", to, "euler | axis-angle | quat | matrix | turn")
        ->required()
        ->check(CLI::IsMember({"euler", "axis-angle", "quat", "matrix", "turn"}));

    auto* compose = app.add_subcommand("compose", "compose gates, first listed acts first");
    compose->add_option("gates", specs, "gate specs")->required();
    auto* geo_flag = compose->add_flag("--geometric", geometric, "turn addition on the sphere (default)");
    compose->add_flag("--algebraic", algebraic, "quaternion product")->excludes(geo_flag);
    compose->add_flag("--verify", verify, "report both paths and their distance");

    auto* synth = app.add_subcommand("synthesize", "plate angles for two QWPs and one HWP");
    synth->add_option("--gate", gate_text, "gate spec")->required();
    synth->add_option("--config", config_text, "qqh | qhq | hqq")->required()->check(CLI::IsMember({"qqh", "qhq", "hqq"}));
    synth->add_flag("--nmr", nmr, "also emit the pulse schedule");

    auto* gadget = app.add_subcommand("gadget", "universal-gadget dial positions");
    gadget->add_option("--gate", gate_text, "gate spec")->required();

    auto* act = app.add_subcommand("act", "apply a turn to a state");
    act->add_option("--turn", turn_text, "gate spec or turn JSON")->required();
    act->add_option("--state", state_text, "point:x,y,z[,r] | jones:re,im,re,im")->required();

    auto* phase = app.add_subcommand("phase", "area, Bargmann invariant and midpoint turn of a polygon");
    phase->add_option("--polygon", file, "polygon JSON file")->required();

    auto* stack = app.add_subcommand("stack", "evaluate an element stack");
    stack->add_option("--file", file, "stack JSON file")->required();

    auto* diagram = app.add_subcommand("diagram", "render turns, arcs and polygons as SVG");
    diagram->add_option("--in", in_path, "scene JSON file")->required();
    diagram->add_option("--out", out_path, "SVG output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        io::Json result;
        if (*convert) {
            result = cli::convert(io::parse_gate_spec(from, degrees), to);
        } else if (*compose) {
            std::vector<Su2Gate> gates;
            for (const std::string& s : specs) gates.push_back(io::parse_gate_spec(s, degrees));
            result = cli::compose(gates, algebraic ? cli::ComposeMethod::Algebraic : cli::ComposeMethod::Geometric, verify);
        } else if (*synth) {
            result = cli::synthesize(io::parse_gate_spec(gate_text, degrees), cli::parse_config(config_text), nmr);
        } else if (*gadget) {
            result = cli::gadget(io::parse_gate_spec(gate_text, degrees), degrees);
        } else if (*act) {
            result = cli::act(parse_turn(turn_text, degrees), cli::parse_state_spec(state_text));
        } else if (*phase) {
            result = cli::phase(io::polygon_from_json(io::parse_json(read_file(file))));
        } else if (*stack) {
            result = cli::stack(io::stack_from_json(io::parse_json(read_file(file))));
        } else if (*diagram) {
            write_file(out_path, cli::diagram(io::parse_json(read_file(in_path))));
            return 0;
        }
        std::cout << io::dump_json(result);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    }
}
