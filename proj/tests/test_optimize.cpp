// Copyright 2026 The qracd Authors
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

#include "qracd/optimize.hpp"

namespace qracd {
namespace {

TEST(GoldenSection, Parabola) {
    const auto r = golden_section_minimize([](double x) { return (x - 0.3) * (x - 0.3) + 1.0; }, -1.0, 2.0, 1e-10);
    EXPECT_NEAR(r.x, 0.3, 1e-8);
    EXPECT_NEAR(r.value, 1.0, 1e-15);
    EXPECT_GT(r.evaluations, 10);
}

TEST(GoldenSection, KinkedObjective) {
    const auto r = golden_section_minimize([](double x) { return std::abs(x + 0.25); }, -1.0, 1.0, 1e-12);
    EXPECT_NEAR(r.x, -0.25, 1e-11);
}

TEST(GoldenSection, MinimumAtEndpoint) {
    const auto r = golden_section_minimize([](double x) { return x; }, 0.0, 1.0, 1e-9);
    EXPECT_EQ(r.x, 0.0);
    EXPECT_EQ(r.value, 0.0);
}

TEST(GoldenSection, IterationCap) {
    EXPECT_THROW(golden_section_minimize([](double x) { return x * x; }, -1.0, 1.0, 1e-12, 5), ConvergenceError);
}

TEST(NelderMead, Rosenbrock) {
    NelderMeadSettings s;
    s.initial_step = 0.5;
    s.max_evaluations = 50000;
    const auto r = nelder_mead_minimize(
        [](const std::array<double, 2> &p) {
            return 100.0 * std::pow(p[1] - p[0] * p[0], 2) + std::pow(1.0 - p[0], 2);
        },
        std::array<double, 2>{-1.2, 1.0}, s);
    EXPECT_NEAR(r.x[0], 1.0, 1e-5);
    EXPECT_NEAR(r.x[1], 1.0, 1e-5);
    EXPECT_LT(r.value, 1e-10);
}

TEST(NelderMead, SixDimensionalQuadratic) {
    const std::array<double, 6> centre = {0.1, -0.2, 0.3, -0.4, 0.5, -0.6};
    NelderMeadSettings s;
    s.initial_step = 0.1;
    s.max_evaluations = 100000;
    const auto r = nelder_mead_minimize(
        [&](const std::array<double, 6> &p) {
            double v = 0.0;
            for (int i = 0; i < 6; ++i) v += (i + 1) * (p[i] - centre[i]) * (p[i] - centre[i]);
            return v;
        },
        std::array<double, 6>{}, s);
    for (int i = 0; i < 6; ++i) EXPECT_NEAR(r.x[i], centre[i], 1e-5);
}

TEST(NelderMead, StopsAtEvaluationCap) {
    NelderMeadSettings s;
    s.max_evaluations = 20;
    const auto r = nelder_mead_minimize([](const std::array<double, 3> &p) { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]; },
                                        std::array<double, 3>{1.0, 1.0, 1.0}, s);
    EXPECT_LE(r.evaluations, 20 + 4);
    EXPECT_LT(r.value, 3.0);
}

TEST(NelderMead, NeverWorseThanStart) {
    const auto f = [](const std::array<double, 2> &p) { return std::sin(3 * p[0]) + std::cos(5 * p[1]); };
    const std::array<double, 2> start = {0.4, 0.9};
    const auto r = nelder_mead_minimize(f, start, NelderMeadSettings{});
    EXPECT_LE(r.value, f(start));
}

}  // namespace
}  // namespace qracd
