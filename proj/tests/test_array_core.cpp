// SPDX-License-Identifier: Apache-2.0
//
// beamcode: codeword synthesis and beam-training simulation for hybrid arrays
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "beamcode/array_core.hpp"
#include "beamcode/ideal_codeword.hpp"
#include "beamcode/target_pattern.hpp"
#include "test_support.hpp"

using namespace beamcode;

namespace
{
    // Independent of the library: plain complex exponentials, no polar().
    cdouble gain_by_summation(const CVector &v, double omega)
    {
        cdouble acc = 0.0;
        for (Eigen::Index n = 0; n < v.size(); ++n)
            acc += v(n) * std::exp(cdouble(0.0, -std::numbers::pi * static_cast<double>(n) * omega));
        return acc;
    }
} // namespace

TEST(SteeringVector, SingleAntennaIsOne)
{
    const CVector a = steering_vector(1, 0.5);
    ASSERT_EQ(a.size(), 1);
    EXPECT_NEAR(std::abs(a(0) - cdouble(1.0, 0.0)), 0.0, 1e-15);
}

TEST(SteeringVector, BroadsideIsFlat)
{
    const CVector a = steering_vector(2, 0.0);
    EXPECT_NEAR(std::abs(a(0) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a(1) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(SteeringVector, EndfireAlternatesSign)
{
    const CVector a = steering_vector(4, 1.0);
    const double expected[] = {0.5, -0.5, 0.5, -0.5};
    for (int n = 0; n < 4; ++n)
        EXPECT_NEAR(std::abs(a(n) - expected[n]), 0.0, 1e-15);
}

TEST(SteeringVector, RejectsNonPositiveSize)
{
    EXPECT_THROW(steering_vector(0, 0.0), std::invalid_argument);
    EXPECT_THROW(steering_vector(-3, 0.0), std::invalid_argument);
}

TEST(SteeringVector, UnitNormAcrossSizes)
{
    Rng rng(11);
    for (int n = 1; n <= 1024; ++n)
    {
        const int draws = (n == 1 || n == 7 || n == 64 || n == 1024) ? 1000 : 8;
        for (int i = 0; i < draws; ++i)
        {
            const double omega = uniform_real(rng, -1.0, 1.0);
            ASSERT_NEAR(steering_vector(n, omega).norm(), 1.0, 1e-12) << "n=" << n;
        }
    }
}

TEST(BeamGain, SteeringVectorPeaksAtSqrtN)
{
    for (int n : {1, 4, 16, 33})
    {
        const double omega = -0.37;
        const cdouble g = beam_gain(steering_vector(n, omega), omega);
        EXPECT_NEAR(std::abs(g - std::sqrt(static_cast<double>(n))), 0.0, 1e-12);
    }
}

TEST(BeamGain, FirstUnitVectorIsOmnidirectional)
{
    CVector e1 = CVector::Zero(8);
    e1(0) = 1.0;
    for (double omega : {-1.0, -0.2, 0.0, 0.9})
        EXPECT_NEAR(std::abs(beam_gain(e1, omega) - 1.0), 0.0, 1e-15);
}

TEST(BeamGain, MatchesDirectSummation)
{
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial)
    {
        const auto n = static_cast<Eigen::Index>(1 + rng() % 64);
        const CVector v = test::random_vector(rng, n);
        const double omega = uniform_real(rng, -1.0, 1.0);
        EXPECT_NEAR(std::abs(beam_gain(v, omega) - gain_by_summation(v, omega)), 0.0, 1e-12);
    }
}

TEST(BeamGain, IsLinear)
{
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial)
    {
        const CVector v1 = test::random_vector(rng, 12);
        const CVector v2 = test::random_vector(rng, 12);
        const cdouble alpha = test::random_complex(rng);
        const double omega = uniform_real(rng, -1.0, 1.0);
        const cdouble lhs = beam_gain(CVector(alpha * v1 + v2), omega);
        const cdouble rhs = alpha * beam_gain(v1, omega) + beam_gain(v2, omega);
        EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
    }
}

TEST(BeamGain, EnergyOverFullSpanIsTwo)
{
    Rng rng(17);
    const std::size_t points = 8193;
    const auto grid = uniform_grid(points);
    const double h = 2.0 / static_cast<double>(points - 1);
    for (int n : {1, 8, 32, 64})
    {
        const Codeword v = test::random_codeword(rng, n);
        double integral = 0.0;
        for (std::size_t i = 0; i < points; ++i)
        {
            const double w = (i == 0 || i + 1 == points) ? 0.5 : 1.0;
            integral += w * std::norm(beam_gain(v, grid[i]));
        }
        EXPECT_NEAR(integral * h, 2.0, 1e-3) << "n=" << n;
    }
}

TEST(SamplePattern, SinglePointAtBroadside)
{
    const Codeword v(steering_vector(8, 0.0));
    const std::vector<double> grid{0.0};
    const auto s = sample_pattern(v, grid);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_NEAR(s[0].magnitude, std::sqrt(8.0), 1e-12);
    EXPECT_NEAR(s[0].omega, 0.0, 0.0);
}

TEST(SamplePattern, EmptyGridGivesEmptyPattern)
{
    const Codeword v(steering_vector(4, 0.1));
    EXPECT_TRUE(sample_pattern(v, std::vector<double>{}).empty());
}

TEST(SamplePattern, AgreesWithPointwiseGain)
{
    const Codeword v = ps_icd(TargetPattern::rect({-1.0, 0.0}), 16, PsIcdConfig{128, 500, 2});
    const auto grid = uniform_grid(2048);
    const auto s = sample_pattern(v, grid);
    ASSERT_EQ(s.size(), grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        const cdouble g = gain_by_summation(v.entries(), grid[i]);
        EXPECT_NEAR(s[i].magnitude, std::abs(g), 1e-12);
        if (std::abs(g) > 1e-9)
        {
            EXPECT_NEAR(std::abs(std::polar(1.0, s[i].phase_rad) - g / std::abs(g)), 0.0, 1e-9);
        }
    }
}

TEST(SamplePattern, CsvHasHeaderAndTwelveDigits)
{
    const std::vector<PatternSample> samples{{-1.0, 1.0 / 3.0, 0.0}, {0.5, 2.0, -1.25}};
    EXPECT_EQ(pattern_to_csv(samples), "omega,magnitude,phase_rad\n-1,0.333333333333,0\n0.5,2,-1.25\n");
}

TEST(Codeword, EnforcesUnitNorm)
{
    CVector v = CVector::Ones(4);
    EXPECT_THROW(Codeword{v}, std::invalid_argument);
    EXPECT_NO_THROW(Codeword{v / 2.0});
    EXPECT_NEAR(Codeword::normalized(v).entries().norm(), 1.0, 1e-15);
    EXPECT_THROW(Codeword::normalized(CVector::Zero(3)), std::invalid_argument);
    EXPECT_THROW(Codeword{CVector(0)}, std::invalid_argument);
}

TEST(SteeringMatrix, TwoByTwo)
{
    const SteeringMatrix a(2, 2);
    const CVector c0 = std::sqrt(2.0) * steering_vector(2, -0.5);
    const CVector c1 = std::sqrt(2.0) * steering_vector(2, 0.5);
    EXPECT_NEAR((a.matrix().col(0) - c0).norm(), 0.0, 1e-15);
    EXPECT_NEAR((a.matrix().col(1) - c1).norm(), 0.0, 1e-15);
    const CMatrix gram = a.matrix() * a.matrix().adjoint();
    EXPECT_NEAR((gram - 2.0 * CMatrix::Identity(2, 2)).norm(), 0.0, 1e-12);
}

TEST(SteeringMatrix, GridIsCellCentred)
{
    const SteeringMatrix a(4, 8);
    for (int k = 1; k <= 8; ++k)
        EXPECT_NEAR(a.grid()[static_cast<std::size_t>(k - 1)], -1.0 + (2.0 * k - 1.0) / 8.0, 1e-15);
}

TEST(SteeringMatrix, EntriesHaveUnitMagnitude)
{
    const SteeringMatrix a(4, 8);
    EXPECT_NEAR((a.matrix().cwiseAbs().array() - 1.0).abs().maxCoeff(), 0.0, 1e-14);
}

TEST(SteeringMatrix, RowGramIsScaledIdentity)
{
    const int sizes[][2] = {{16, 128}, {32, 128}, {64, 128}, {7, 11}, {1, 1}, {5, 5}, {3, 40}, {128, 128}};
    for (const auto &nk : sizes)
    {
        const SteeringMatrix a(nk[0], nk[1]);
        const CMatrix gram = a.matrix() * a.matrix().adjoint();
        const double err = (gram - static_cast<double>(nk[1]) * CMatrix::Identity(nk[0], nk[0])).norm();
        EXPECT_LT(err, 1e-8) << nk[0] << "x" << nk[1];
    }
}

TEST(SteeringMatrix, RejectsGridSmallerThanArray)
{
    EXPECT_THROW(SteeringMatrix(8, 7), std::invalid_argument);
    EXPECT_THROW(SteeringMatrix(0, 7), std::invalid_argument);
}

TEST(MainLobeMse, ZeroForExactlyFlatPattern)
{
    // A single active element has |G| = 1 everywhere, the full-span level.
    CVector e1 = CVector::Zero(6);
    e1(0) = 1.0;
    const auto target = TargetPattern::rect({-1.0, 1.0});
    EXPECT_NEAR(main_lobe_mse(Codeword(e1), target, 1000), 0.0, 1e-24);
}

TEST(MainLobeMse, MatchesExplicitInteriorAverage)
{
    const Codeword v(steering_vector(8, -0.4));
    const auto target = TargetPattern::rect({-0.6, -0.1});
    const std::size_t count = 17;
    double acc = 0.0;
    for (std::size_t i = 1; i <= count; ++i)
    {
        const double omega = -0.6 + 0.5 * static_cast<double>(i) / static_cast<double>(count + 1);
        const double e = std::abs(gain_by_summation(v.entries(), omega)) - target.amplitude();
        acc += e * e;
    }
    EXPECT_NEAR(main_lobe_mse(v, target, count), acc / count, 1e-13);
}

TEST(MainLobeMse, InteriorGridExcludesEndpoints)
{
    const auto grid = interior_grid({-1.0, 0.0}, 1000);
    ASSERT_EQ(grid.size(), 1000u);
    EXPECT_GT(grid.front(), -1.0);
    EXPECT_LT(grid.back(), 0.0);
    EXPECT_NEAR(grid[1] - grid[0], 1.0 / 1001.0, 1e-15);
}

TEST(MainLobeMse, RejectsDegenerateGrid)
{
    const Codeword v(steering_vector(4, 0.0));
    EXPECT_THROW(main_lobe_mse(v, TargetPattern::rect({-1.0, 0.0}), 1), std::invalid_argument);
}

TEST(MainLobeMse, LeastSquaresBaselineLandsInPublishedBand)
{
    const auto target = TargetPattern::rect({-1.0, 0.0});
    EXPECT_NEAR(target.amplitude(), std::sqrt(2.0), 1e-15);
    for (int n : {16, 32})
    {
        const double mse = main_lobe_mse(ls_icd(target, n, 128), target);
        EXPECT_GE(mse, 0.015) << "n=" << n;
        EXPECT_LE(mse, 0.035) << "n=" << n;
    }
}
