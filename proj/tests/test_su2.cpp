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

#include <cmath>

#include "generators.hpp"
#include "turnkit/su2.hpp"

namespace turnkit {
namespace {

using testing::make_rng;
using testing::random_gate;

const double kRt = 1.0 / std::sqrt(2.0);

TEST(TauMatrices, SatisfyQuaternionRelations) {
    // tau_j tau_k = delta_jk tau0 + i eps_jkl tau_l, exactly on the stored entries.
    const Complex i(0, 1);
    const ComplexMatrix2& t1 = tau::t1;
    const ComplexMatrix2& t2 = tau::t2;
    const ComplexMatrix2& t3 = tau::t3;
    EXPECT_EQ((t1 * t1).max_abs_diff(tau::t0), 0.0);
    EXPECT_EQ((t2 * t2).max_abs_diff(tau::t0), 0.0);
    EXPECT_EQ((t3 * t3).max_abs_diff(tau::t0), 0.0);
    EXPECT_EQ((t1 * t2).max_abs_diff(t3 * i), 0.0);
    EXPECT_EQ((t2 * t3).max_abs_diff(t1 * i), 0.0);
    EXPECT_EQ((t3 * t1).max_abs_diff(t2 * i), 0.0);
}

TEST(Su2Gate, ConstructionNormalizesAndRejects) {
    const Su2Gate g = gate_from_components(2.0, {0.0, 0.0, 2.0});
    EXPECT_NEAR(g.a0(), kRt, 1e-15);
    EXPECT_NEAR(g.a().z, kRt, 1e-15);
    try {
        gate_from_components(0.0, {1e-12, 0.0, 0.0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NearZeroNorm);
    }
    try {
        Su2Gate::from_unit(1.0 + 1e-5, {0.0, 0.0, 0.0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NormDrift);
    }
    EXPECT_NO_THROW(Su2Gate::from_unit(1.0 + 1e-9, {0.0, 0.0, 0.0}));
}

TEST(Su2Gate, MatrixView) {
    // (a0 - i a.tau) for a = (0.1, 0.2, 0.3), assembled by hand.
    const Su2Gate g = gate_from_components(std::sqrt(1.0 - 0.14), {0.1, 0.2, 0.3});
    const double a0 = g.a0();
    const ComplexMatrix2 m = g.to_matrix();
    EXPECT_NEAR(std::abs(m(0, 0) - Complex(a0, -0.1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m(0, 1) - Complex(-0.3, -0.2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m(1, 0) - Complex(0.3, -0.2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m(1, 1) - Complex(a0, 0.1)), 0.0, 1e-15);
}

TEST(Su2Gate, QuaternionProductMatchesMatrixProduct) {
    auto rng = make_rng(1);
    for (int k = 0; k < 10000; ++k) {
        const Su2Gate u = random_gate(rng);
        const Su2Gate v = random_gate(rng);
        ASSERT_LE((u * v).to_matrix().max_abs_diff(u.to_matrix() * v.to_matrix()), 1e-12);
    }
}

TEST(Su2Gate, TraceIsConjugationInvariant) {
    auto rng = make_rng(2);
    for (int k = 0; k < 10000; ++k) {
        const Su2Gate u = random_gate(rng);
        const Su2Gate v = random_gate(rng);
        ASSERT_NEAR(trace(u * v), trace(v * u), 1e-12);
    }
}

TEST(Su2Gate, TraceExamples) {
    EXPECT_EQ(trace(Su2Gate()), 2.0);
    const Su2Gate eighth = gate_from_components(1.0, {0.0, 0.0, 1.0});
    EXPECT_NEAR(trace(eighth), std::sqrt(2.0), 1e-15);
    const Su2Gate h = Su2Gate::from_unit(0.0, {std::cos(0.7), std::sin(0.7), 0.0});
    EXPECT_EQ(trace(h), 0.0);
}

TEST(Su2Gate, InverseAndCommutator) {
    auto rng = make_rng(3);
    for (int k = 0; k < 1000; ++k) {
        const Su2Gate u = random_gate(rng);
        const Su2Gate v = random_gate(rng);
        ASSERT_TRUE(exact_eq(u * inverse(u), Su2Gate(), 1e-14));
        const Su2Gate c = commutator(v, u);
        ASSERT_TRUE(exact_eq(u * v * c, v * u, 1e-12));
    }
}

TEST(Su2Gate, EqualityFlavours) {
    auto rng = make_rng(4);
    const Su2Gate u = random_gate(rng);
    EXPECT_TRUE(exact_eq(u, u));
    EXPECT_FALSE(exact_eq(u, -u));
    EXPECT_TRUE(projective_eq(u, -u));
    EXPECT_NEAR(exact_distance(u, -u), 2.0, 1e-14);
    EXPECT_EQ(projective_distance(u, -u), 0.0);
    EXPECT_TRUE(Su2Gate().is_central());
    EXPECT_TRUE((-Su2Gate()).is_central());
    EXPECT_FALSE(u.is_central());
}

TEST(AxisAngle, Examples) {
    const Su2Gate q = from_axis_angle(UnitVec3::e1(), 0.5 * kPi);
    EXPECT_NEAR(q.a0(), kRt, 1e-15);
    EXPECT_NEAR(q.a().x, kRt, 1e-15);

    const AxisAngle minus = to_axis_angle(-Su2Gate());
    EXPECT_TRUE(minus.degenerate);
    EXPECT_EQ(minus.angle, kTwoPi);
    const AxisAngle id = to_axis_angle(Su2Gate());
    EXPECT_TRUE(id.degenerate);
    EXPECT_EQ(id.angle, 0.0);

    // a0 < 0 keeps the axis and reports an angle above pi.
    const AxisAngle big = to_axis_angle(from_axis_angle(UnitVec3::e2(), 1.5 * kPi));
    EXPECT_NEAR(big.angle, 1.5 * kPi, 1e-14);
    EXPECT_NEAR(big.axis.y(), 1.0, 1e-14);
}

TEST(AxisAngle, RoundTrip) {
    auto rng = make_rng(5);
    for (int k = 0; k < 10000; ++k) {
        const Su2Gate u = random_gate(rng);
        if (std::abs(u.a0()) >= 1.0 - 1e-9) continue;
        const AxisAngle aa = to_axis_angle(u);
        ASSERT_GE(aa.angle, 0.0);
        ASSERT_LE(aa.angle, kTwoPi);
        ASSERT_TRUE(exact_eq(from_axis_angle(aa), u, 1e-10));
    }
}

TEST(Euler, Examples) {
    const Su2Gate q0 = from_euler({0.0, 0.5 * kPi, 0.0});
    EXPECT_NEAR(q0.a0(), kRt, 1e-15);
    EXPECT_NEAR(q0.a().x, kRt, 1e-15);
    EXPECT_EQ(q0.a().y, 0.0);
    EXPECT_EQ(q0.a().z, 0.0);
    EXPECT_TRUE(exact_eq(from_euler({0.0, 0.0, 0.0}), Su2Gate(), 0.0));

    const EulerAngles e = to_euler(from_euler({1.0, 2.0, 3.0}));
    EXPECT_NEAR(e.xi, 1.0, 1e-12);
    EXPECT_NEAR(e.eta, 2.0, 1e-12);
    EXPECT_NEAR(e.zeta, 3.0, 1e-12);
}

TEST(Euler, MatchesExponentialProduct) {
    // u(xi, eta, zeta) = exp(-i xi/2 tau3) exp(-i eta/2 tau1) exp(-i zeta/2 tau3).
    auto rng = make_rng(6);
    for (int k = 0; k < 1000; ++k) {
        const double xi = testing::uniform(rng, -10, 10);
        const double eta = testing::uniform(rng, -10, 10);
        const double zeta = testing::uniform(rng, -10, 10);
        const Su2Gate p = from_axis_angle(UnitVec3::e3(), xi) * from_axis_angle(UnitVec3::e1(), eta) *
                          from_axis_angle(UnitVec3::e3(), zeta);
        ASSERT_TRUE(exact_eq(from_euler({xi, eta, zeta}), p, 1e-12));
    }
}

TEST(Euler, SignExactRoundTripAndRanges) {
    auto rng = make_rng(7);
    int checked = 0;
    for (int k = 0; k < 10000; ++k) {
        const Su2Gate u = random_gate(rng);
        const EulerAngles e = to_euler(u);
        ASSERT_GE(e.xi, 0.0);
        ASSERT_LT(e.xi, 2.0 * kTwoPi);
        ASSERT_GE(e.eta, 0.0);
        ASSERT_LE(e.eta, kPi);
        ASSERT_GE(e.zeta, 0.0);
        ASSERT_LT(e.zeta, kTwoPi);
        if (e.eta < 1e-6 || e.eta > kPi - 1e-6) continue;
        ++checked;
        ASSERT_TRUE(exact_eq(from_euler(e), u, 1e-10));
    }
    EXPECT_GT(checked, 9000);
}

TEST(Euler, GimbalLockSetsZetaZero) {
    for (const double a : {0.0, 0.4, 2.0, 5.0, 9.0}) {
        const Su2Gate r = from_euler({a, 0.0, 0.0});
        const EulerAngles e = to_euler(r);
        EXPECT_EQ(e.zeta, 0.0);
        EXPECT_EQ(e.eta, 0.0);
        EXPECT_TRUE(exact_eq(from_euler(e), r, 1e-12));

        const Su2Gate f = from_euler({a, kPi, 0.3});
        const EulerAngles g = to_euler(f);
        EXPECT_EQ(g.zeta, 0.0);
        EXPECT_EQ(g.eta, kPi);
        EXPECT_TRUE(exact_eq(from_euler(g), f, 1e-12));
    }
}

TEST(UnitaryMatrix, ProjectsOntoSu2WithCanonicalBranch) {
    auto rng = make_rng(8);
    for (int k = 0; k < 1000; ++k) {
        const Su2Gate u = random_gate(rng);
        const Complex phase = std::polar(1.0, testing::uniform(rng, -kPi, kPi));
        const Su2Gate g = gate_from_unitary_matrix(u.to_matrix() * phase);
        ASSERT_TRUE(projective_eq(g, u, 1e-12));
        ASSERT_GE(g.a0(), 0.0);
    }
    // a0 = 0: the first nonzero of a1, a2, a3 is made positive.
    const Su2Gate minus_x = Su2Gate::from_unit(0.0, {0.0, -1.0, 0.0});
    const Su2Gate g = gate_from_unitary_matrix(minus_x.to_matrix());
    EXPECT_NEAR(g.a().y, 1.0, 1e-15);

    ComplexMatrix2 bad = ComplexMatrix2::identity();
    bad(0, 0) = Complex(1.1, 0.0);
    try {
        gate_from_unitary_matrix(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonUnitaryMatrix);
    }
}

TEST(Vec3, BasicsAndRotation) {
    EXPECT_THROW(UnitVec3(Vec3{0.0, 0.0, 0.0}), Error);
    const UnitVec3 v = UnitVec3::from_spherical(0.3, 1.2);
    EXPECT_NEAR(v.polar(), 0.3, 1e-15);
    EXPECT_NEAR(v.azimuth(), 1.2, 1e-15);
    const Vec3 r = rotate_about(UnitVec3::e1(), UnitVec3::e3(), 0.5 * kPi);
    EXPECT_NEAR(r.y, 1.0, 1e-15);
    EXPECT_NEAR(angle_between(UnitVec3::e1(), UnitVec3::e2()), 0.5 * kPi, 1e-15);
    EXPECT_NEAR(wrap_positive(-0.5, 1.0), 0.5, 1e-15);
}

}  // namespace
}  // namespace turnkit
