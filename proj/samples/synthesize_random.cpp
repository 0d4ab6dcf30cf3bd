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


// Synthesizes a random gate with each three-plate gadget, then checks the
// plates against the target and lowers one setting to NMR pulses.

#include <cstdio>
#include <random>

#include "turnkit/turnkit.hpp"

int main() {
    using namespace turnkit;
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    const Su2Gate u = gate_from_components(g(rng), {g(rng), g(rng), g(rng)});
    const Turn t = turn_from_gate(u);
    std::printf("target turn: axis (%.4f, %.4f, %.4f), length %.4f\n", t.axis().vec().x, t.axis().vec().y,
                t.axis().vec().z, t.length());

    for (const GadgetConfig c : {GadgetConfig::QQH, GadgetConfig::QHQ, GadgetConfig::HQQ}) {
        const GadgetSetting s = synthesize(u, c);
        const std::size_t h = hwp_slot(c);
        std::printf("%s:", std::string(gadget_config_name(c)).c_str());
        for (std::size_t k = 0; k < 3; ++k) std::printf("  %s %7.3f deg", k == h ? "H" : "Q", s.angles[k] * 180.0 / kPi);
        std::printf("  error %.1e\n", exact_distance(realize(s), s.sign > 0 ? u : -u));
    }

    for (const PulseElement& p : to_nmr(synthesize(u, GadgetConfig::QHQ)))
        std::printf("pulse %s phase %.3f rad\n", p.flip == PulseFlip::Pi ? "pi  " : "pi/2", p.phase);
    return 0;
}
