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


#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>
#include <tuple>

#include "generators.hpp"
#include "turnkit/synthesis.hpp"

namespace turnkit {
namespace {

using testing::make_rng;
using testing::random_gate;
using testing::uniform;

constexpr std::array<GadgetConfig, 3> kConfigs{GadgetConfig::QQH, GadgetConfig::QHQ, GadgetConfig::HQQ};

double angle_gap(double a, double b) { return std::abs(std::remainder(a - b, kPi)); }

TEST(VariableBirefringence, Stacks) {
    auto rng = make_rng(70);
    for (int k = 0; k < 1000; ++k) {
        const double eta = uniform(rng, -10, 10);
        const Su2Gate c = compensator(-0.25 * kPi, eta);
        ASSERT_TRUE(exact_eq(evaluate_stack(variable_birefringence_qqh(eta)), c, 1e-12));
        ASSERT_TRUE(exact_eq(evaluate_stack(variable_birefringence_qhq(eta)), c, 1e-12));
    }
    // eta = 0 is sign-exact: the stack gives +tau0.
    EXPECT_TRUE(exact_eq(evaluate_stack(variable_birefringence_qqh(0.0)), Su2Gate(), 1e-15));
    EXPECT_TRUE(exact_eq(evaluate_stack(variable_birefringence_qqh(0.5 * kPi)), compensator(-0.25 * kPi, 0.5 * kPi), 1e-15));
}

TEST(VariableBirefringence, QhqToQqhByCommutation) {
    // Q0 H_b Q0 = Q0 Q_{2b} H_b.
    auto rng = make_rng(71);
    for (int k = 0; k < 100; ++k) {
        const double eta = uniform(rng, 0, kTwoPi);
        const double b = 0.5 * kPi + 0.25 * eta;
        ASSERT_LT(angle_gap(hq_commute(b, 0.0), 0.5 * eta), 1e-12);
    }
}

TEST(Synthesize, IdentityFixture) {
    // Frozen from an independent numpy evaluation of the closed forms.
    const double q = 0.7853981633974483, t = 2.356194490192345;
    const std::array<std::array<double, 3>, 3> expected{{{t, q, q}, {q, t, q}, {q, q, t}}};
    for (std::size_t c = 0; c < 3; ++c) {
        const GadgetSetting s = synthesize(Su2Gate(), kConfigs[c]);
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(s.angles[k], expected[c][k], 1e-15);
        EXPECT_EQ(s.sign, 1);
        EXPECT_TRUE(exact_eq(realize(s), Su2Gate(), 1e-15));
    }
}

TEST(Synthesize, EulerFixture) {
    const std::array<std::array<double, 3>, 3> expected{{{2.356194490192345, 2.2853981633974483, 1.2853981633974483},
                                                         {2.4269908169872414, 2.356194490192345, 1.2853981633974483},
                                                         {2.4269908169872414, 0.2853981633974483, 2.356194490192345}}};
    const Su2Gate u = from_euler({1.0, 2.0, 3.0});
    for (std::size_t c = 0; c < 3; ++c) {
        const GadgetSetting s = synthesize(u, kConfigs[c]);
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(s.angles[k], expected[c][k], 1e-12);
        EXPECT_EQ(s.sign, 1);
    }
}

TEST(Synthesize, QhqDialsMatchPrintedForms) {
    auto rng = make_rng(72);
    for (int k = 0; k < 1000; ++k) {
        const Su2Gate u = random_gate(rng);
        const EulerAngles e = to_euler(u);
        const GadgetSetting s = synthesize(u, GadgetConfig::QHQ);
        ASSERT_LT(angle_gap(s.angles[0], 0.25 * kPi - 0.5 * e.zeta), 1e-12);
        ASSERT_LT(angle_gap(s.angles[1], -0.25 * kPi + 0.25 * (e.xi + e.eta - e.zeta)), 1e-12);
        ASSERT_LT(angle_gap(s.angles[2], 0.25 * kPi + 0.5 * e.xi), 1e-12);
        ASSERT_EQ(dial_positions(u), s.angles);
    }
}

TEST(Synthesize, Universality) {
    auto rng = make_rng(73);
    for (int k = 0; k < 10000; ++k) {
        const Su2Gate u = random_gate(rng);
        for (const GadgetConfig c : kConfigs) {
            const GadgetSetting s = synthesize(u, c);
            for (const double a : s.angles) {
                ASSERT_GE(a, 0.0);
                ASSERT_LT(a, kPi);
            }
            const Su2Gate r = realize(s);
            ASSERT_TRUE(projective_eq(r, u, 1e-10));
            // Canonical Euler ranges make the closed forms sign-exact.
            ASSERT_EQ(s.sign, 1);
            ASSERT_TRUE(exact_eq(r, u, 1e-10));
            ASSERT_EQ(synthesize(u, c).angles, s.angles);
        }
    }
}

TEST(Synthesize, ModifiedEulerForm) {
    // u = C_{xi/2}(eta) R(xi + zeta) round-trips.
    auto rng = make_rng(74);
    for (int k = 0; k < 1000; ++k) {
        const double xi = uniform(rng, -10, 10), eta = uniform(rng, -10, 10), zeta = uniform(rng, -10, 10);
        const Su2Gate u = compensator(0.5 * xi, eta) * rotator(xi + zeta);
        ASSERT_TRUE(exact_eq(u, from_euler({xi, eta, zeta}), 1e-12));
        for (const GadgetConfig c : kConfigs) ASSERT_TRUE(projective_eq(realize(synthesize(u, c)), u, 1e-10));
    }
}

TEST(Synthesize, ConfigurationsAgreeAndCommute) {
    auto rng = make_rng(75);
    for (int k = 0; k < 1000; ++k) {
        const Su2Gate u = random_gate(rng);
        const GadgetSetting qhq = synthesize(u, GadgetConfig::QHQ);
        const GadgetSetting qqh = synthesize(u, GadgetConfig::QQH);
        const GadgetSetting hqq = synthesize(u, GadgetConfig::HQQ);
        ASSERT_TRUE(exact_eq(realize(qhq), realize(qqh), 1e-10));
        ASSERT_TRUE(exact_eq(realize(qhq), realize(hqq), 1e-10));
        // Matrix Q_a H_b Q_c = Q_a Q_{2b-c} H_b = H_b Q_{2b-a} Q_c.
        const auto [c, b, a] = qhq.angles;
        ASSERT_LT(angle_gap(qqh.angles[0], b), 1e-12);
        ASSERT_LT(angle_gap(qqh.angles[1], hq_commute(b, c)), 1e-12);
        ASSERT_LT(angle_gap(qqh.angles[2], a), 1e-12);
        ASSERT_LT(angle_gap(hqq.angles[0], c), 1e-12);
        ASSERT_LT(angle_gap(hqq.angles[1], hq_commute(b, a)), 1e-12);
        ASSERT_LT(angle_gap(hqq.angles[2], b), 1e-12);
    }
}

TEST(Synthesize, DistinctGatesGetDistinctDials) {
    auto rng = make_rng(76);
    for (int k = 0; k < 10000; ++k) {
        const Su2Gate u = random_gate(rng);
        const Su2Gate v = random_gate(rng);
        const EulerAngles eu = to_euler(u), ev = to_euler(v);
        if (eu.eta < 1e-9 || eu.eta > kPi - 1e-9 || ev.eta < 1e-9 || ev.eta > kPi - 1e-9) continue;
        for (const GadgetConfig c : kConfigs) {
            const auto a = synthesize(u, c).angles;
            const auto b = synthesize(v, c).angles;
            double gap = 0.0;
            for (int j = 0; j < 3; ++j) gap = std::max(gap, angle_gap(a[j], b[j]));
            ASSERT_GT(gap, 0.0);
        }
    }
    // -u differs from u only in the HWP angle, by pi/2.
    const Su2Gate u = random_gate(rng);
    const auto a = synthesize(u, GadgetConfig::QHQ).angles;
    const auto b = synthesize(-u, GadgetConfig::QHQ).angles;
    EXPECT_LT(angle_gap(a[0], b[0]), 1e-12);
    EXPECT_LT(angle_gap(a[1] + 0.5 * kPi, b[1]), 1e-12);
    EXPECT_LT(angle_gap(a[2], b[2]), 1e-12);
}

TEST(Realize, AllZeroDials) {
    // Oracle: Q0 H0 Q0 = -tau0.
    const GadgetSetting s{GadgetConfig::QHQ, {0.0, 0.0, 0.0}, 1};
    EXPECT_TRUE(exact_eq(realize(s), qwp(0) * hwp(0) * qwp(0), 0.0));
    EXPECT_TRUE(exact_eq(realize(s), -Su2Gate(), 1e-15));
}

TEST(DialPositions, Identity) {
    const auto d = dial_positions(Su2Gate());
    EXPECT_NEAR(d[0], 0.25 * kPi, 1e-15);
    EXPECT_NEAR(d[1], 0.75 * kPi, 1e-15);
    EXPECT_NEAR(d[2], 0.25 * kPi, 1e-15);
}

TEST(DialPositions, LinearInEulerAngles) {
    auto rng = make_rng(77);
    for (int k = 0; k < 1000; ++k) {
        const double xi = uniform(rng, 0.2, 2.0), eta = uniform(rng, 0.2, 2.0), zeta = uniform(rng, 0.2, 2.0);
        const double d = uniform(rng, 0.0, 0.15);
        const auto a = dial_positions(from_euler({xi, eta, zeta}));
        const auto b = dial_positions(from_euler({xi + d, eta + d, zeta + d}));
        ASSERT_LT(angle_gap(b[0] - a[0], -0.5 * d), 1e-10);
        ASSERT_LT(angle_gap(b[1] - a[1], 0.25 * d), 1e-10);
        ASSERT_LT(angle_gap(b[2] - a[2], 0.5 * d), 1e-10);
    }
}

TEST(Nmr, Lowering) {
    const GadgetSetting qqh = synthesize(from_euler({0.4, 1.0, 2.0}), GadgetConfig::QQH);
    const auto pulses = to_nmr(qqh);
    ASSERT_EQ(pulses.size(), 3u);
    EXPECT_EQ(pulses[0].flip, PulseFlip::Pi);
    EXPECT_EQ(pulses[1].flip, PulseFlip::HalfPi);
    EXPECT_EQ(pulses[2].flip, PulseFlip::HalfPi);

    const GadgetSetting q45{GadgetConfig::QHQ, {0.25 * kPi, 0.0, 0.0}, 1};
    EXPECT_NEAR(to_nmr(q45)[0].phase, 0.5 * kPi, 1e-15);

    const GadgetSetting id = synthesize(Su2Gate(), GadgetConfig::QHQ);
    EXPECT_TRUE(exact_eq(simulate_pulses(to_nmr(id)), realize(id), 1e-15));
}

TEST(Nmr, SimulationMatchesPlates) {
    auto rng = make_rng(78);
    for (int k = 0; k < 1000; ++k) {
        const GadgetConfig c = kConfigs[k % 3];
        const GadgetSetting s{c, {uniform(rng, 0, kPi), uniform(rng, 0, kPi), uniform(rng, 0, kPi)}, 1};
        ASSERT_TRUE(exact_eq(simulate_pulses(to_nmr(s)), realize(s), 1e-10));
        for (const PulseElement& p : to_nmr(s)) {
            ASSERT_GE(p.phase, 0.0);
            ASSERT_LT(p.phase, kTwoPi);
        }
    }
}

TEST(Reach, QwpStacks) {
    EXPECT_NEAR(max_reachable_length(1), 0.25 * kPi, 0.0);
    EXPECT_NEAR(max_reachable_length(3), 0.75 * kPi, 1e-15);
    EXPECT_EQ(max_reachable_length(9), kPi);
    auto rng = make_rng(79);
    for (int k = 0; k < 10000; ++k) {
        const Su2Gate g = qwp(uniform(rng, 0, kPi)) * qwp(uniform(rng, 0, kPi)) * qwp(uniform(rng, 0, kPi));
        ASSERT_LE(turn_from_gate(g).length(), max_reachable_length(3) + 1e-9);
    }
}

}  // namespace
}  // namespace turnkit
