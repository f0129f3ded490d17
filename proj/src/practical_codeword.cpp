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

#include "beamcode/practical_codeword.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "beamcode/errors.hpp"
#include "beamcode/seeding.hpp"

namespace beamcode
{
    namespace
    {
        // Magnitudes at or below this are treated as exactly zero.
        constexpr double kDegenerate = 1e-14;

        cdouble unit_phasor(const PhaseSet &phases, std::size_t index)
        {
            return std::polar(1.0, phases[index]);
        }

        double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }
    } // namespace

    // ---------------------------------------------------------------- HybridCodeword

    CMatrix analog_matrix(const PhaseSet &phases, const PhaseIndexMatrix &indices)
    {
        CMatrix F(indices.rows(), indices.cols());
        for (Eigen::Index n = 0; n < indices.rows(); ++n)
            for (Eigen::Index i = 0; i < indices.cols(); ++i)
                F(n, i) = unit_phasor(phases, static_cast<std::size_t>(indices(n, i)));
        return F;
    }

    HybridCodeword::HybridCodeword(PhaseSet phases, PhaseIndexMatrix analog_indices, CVector digital)
        : phases_(std::move(phases)), indices_(std::move(analog_indices)), digital_(std::move(digital))
    {
        if (indices_.rows() < 1 || indices_.cols() < 1)
            throw std::invalid_argument("Analog matrix cannot be empty.");
        if (digital_.size() != indices_.cols())
            throw std::invalid_argument("Digital vector length must equal the number of RF chains.");
        const auto count = static_cast<int>(phases_.size());
        if ((indices_.array() < 0).any() || (indices_.array() >= count).any())
            throw std::invalid_argument("Analog phase index outside the phase set.");
        const double norm = (analog() * digital_).norm();
        if (std::abs(norm - 1.0) > Codeword::kNormTolerance)
            throw std::invalid_argument("Hybrid codeword must realize a unit-norm vector.");
    }

    HybridCodeword HybridCodeword::finalize(PhaseSet phases, PhaseIndexMatrix analog_indices, const CVector &digital)
    {
        const double norm = (analog_matrix(phases, analog_indices) * digital).norm();
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw NumericalError("Hybrid codeword realizes a zero vector and cannot be normalized.");
        return HybridCodeword(std::move(phases), std::move(analog_indices), digital / norm);
    }

    CMatrix HybridCodeword::analog() const
    {
        return analog_matrix(phases_, indices_);
    }

    Codeword HybridCodeword::realized() const
    {
        return Codeword::normalized(analog() * digital_);
    }

    double deviation(const CVector &v, const CVector &vp)
    {
        if (v.size() != vp.size())
            throw std::invalid_argument("Deviation needs vectors of equal length.");
        return (v - vp).norm();
    }

    HybridCodeword design_nrf1(const Codeword &v, const PhaseSet &phases)
    {
        const auto N = static_cast<Eigen::Index>(v.size());
        PhaseIndexMatrix idx(N, 1);
        for (Eigen::Index n = 0; n < N; ++n)
            idx(n, 0) = static_cast<int>(phases.nearest_index(std::arg(v.entries()(n))));
        CVector digital(1);
        digital(0) = 1.0 / std::sqrt(static_cast<double>(N));
        return HybridCodeword(phases, std::move(idx), std::move(digital));
    }

    // ---------------------------------------------------------------- two RF chains

    TwoRfInstance TwoRfInstance::from_complex(cdouble target, cdouble first, cdouble second)
    {
        return TwoRfInstance{std::abs(target), wrap_phase(std::arg(target)), std::abs(first),
                             wrap_phase(std::arg(first)), std::abs(second), wrap_phase(std::arg(second))};
    }

    double two_rf_residual(const TwoRfInstance &inst, double theta1, double theta2)
    {
        const cdouble diff = std::polar(inst.alpha, inst.beta) - std::polar(inst.zeta1, inst.psi1 + theta1) -
                             std::polar(inst.zeta2, inst.psi2 + theta2);
        return std::abs(diff);
    }

    std::array<PhasePair, 2> two_rf_branches(const TwoRfInstance &inst)
    {
        const double cross = (inst.zeta1 + inst.zeta2) * (inst.zeta1 - inst.zeta2);
        const double a2 = inst.alpha * inst.alpha;
        const double acos1 = std::acos(clamp_unit((a2 + cross) / (2.0 * inst.zeta1 * inst.alpha)));
        const double acos2 = std::acos(clamp_unit((a2 - cross) / (2.0 * inst.zeta2 * inst.alpha)));
        const double base1 = inst.beta - inst.psi1;
        const double base2 = inst.beta - inst.psi2;
        return {PhasePair{wrap_phase(base1 + acos1), wrap_phase(base2 - acos2)},
                PhasePair{wrap_phase(base1 - acos1), wrap_phase(base2 + acos2)}};
    }

    PhasePair solve_two_rf_continuous(const TwoRfInstance &inst)
    {
        const bool z1 = inst.zeta1 <= kDegenerate;
        const bool z2 = inst.zeta2 <= kDegenerate;
        if (z1 && z2)
            return {0.0, 0.0};
        if (z2)
            return {wrap_phase(inst.beta - inst.psi1), 0.0};
        if (z1)
            return {0.0, wrap_phase(inst.beta - inst.psi2)};
        if (inst.alpha <= kDegenerate)
            return {wrap_phase(-inst.psi1), wrap_phase(kPi - inst.psi2)};

        const auto br = two_rf_branches(inst);
        const double r0 = two_rf_residual(inst, br[0].theta1, br[0].theta2);
        const double r1 = two_rf_residual(inst, br[1].theta1, br[1].theta2);
        return r1 < r0 ? br[1] : br[0];
    }

    TwoRfSolution solve_two_rf(const TwoRfInstance &inst, const PhaseSet &phases)
    {
        auto evaluate = [&](std::size_t i1, std::size_t i2) {
            return TwoRfSolution{i1, i2, two_rf_residual(inst, phases[i1], phases[i2])};
        };

        const bool z1 = inst.zeta1 <= kDegenerate;
        const bool z2 = inst.zeta2 <= kDegenerate;
        if (z1 && z2)
            return evaluate(0, 0);
        if (z2)
            return evaluate(phases.nearest_index(inst.beta - inst.psi1), 0);
        if (z1)
            return evaluate(0, phases.nearest_index(inst.beta - inst.psi2));
        if (inst.alpha <= kDegenerate)
        {
            // anti-align the phasors as closely as the set allows
            TwoRfSolution best = evaluate(0, phases.nearest_index(inst.psi1 + phases[0] + kPi - inst.psi2));
            for (std::size_t i1 = 1; i1 < phases.size(); ++i1)
            {
                auto cand = evaluate(i1, phases.nearest_index(inst.psi1 + phases[i1] + kPi - inst.psi2));
                if (cand.residual < best.residual)
                    best = cand;
            }
            return best;
        }

        const auto br = two_rf_branches(inst);
        const auto first = evaluate(phases.nearest_index(br[0].theta1), phases.nearest_index(br[0].theta2));
        const auto second = evaluate(phases.nearest_index(br[1].theta1), phases.nearest_index(br[1].theta2));
        return second.residual < first.residual ? second : first;
    }

    // ---------------------------------------------------------------- fast search

    double row_residual(cdouble target, const CVector &digital, const PhaseSet &phases,
                        std::span<const std::size_t> indices)
    {
        if (static_cast<Eigen::Index>(indices.size()) != digital.size())
            throw std::invalid_argument("Row length must equal the number of RF chains.");
        cdouble acc = target;
        for (std::size_t i = 0; i < indices.size(); ++i)
            acc -= digital(static_cast<Eigen::Index>(i)) * unit_phasor(phases, indices[i]);
        return std::abs(acc);
    }

    FsRowResult fs_row(cdouble target, const CVector &digital, const PhaseSet &phases,
                       std::span<const std::size_t> initial)
    {
        const auto n_rf = static_cast<std::size_t>(digital.size());
        if (n_rf < 3)
            throw std::invalid_argument("Fast search needs at least three RF chains.");
        if (initial.size() != n_rf)
            throw std::invalid_argument("Initial row length must equal the number of RF chains.");
        for (auto idx : initial)
            if (idx >= phases.size())
                throw std::invalid_argument("Initial row holds an index outside the phase set.");

        const std::size_t free_count = n_rf - 2;
        const int cap = 64 * static_cast<int>(free_count);

        FsRowResult res;
        res.indices.assign(initial.begin(), initial.end());
        std::vector<std::size_t> &theta = res.indices;

        std::vector<cdouble> terms(n_rf);
        for (std::size_t i = 2; i < n_rf; ++i)
            terms[i] = digital(static_cast<Eigen::Index>(i)) * unit_phasor(phases, theta[i]);

        const cdouble f1 = digital(0);
        const cdouble f2 = digital(1);
        std::size_t unchanged = 0;
        double current = 0.0;

        for (int t = 1; t <= cap; ++t)
        {
            const std::size_t p = 2 + static_cast<std::size_t>(t - 1) % free_count;

            cdouble fixed = target;
            for (std::size_t i = 2; i < n_rf; ++i)
                if (i != p)
                    fixed -= terms[i];

            const cdouble fp = digital(static_cast<Eigen::Index>(p));
            std::size_t best_m = 0;
            TwoRfSolution best_pair{};
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t m = 0; m < phases.size(); ++m)
            {
                const cdouble rest = fixed - fp * unit_phasor(phases, m);
                const auto sol = solve_two_rf(TwoRfInstance::from_complex(rest, f1, f2), phases);
                ++res.evaluations;
                if (sol.residual < best)
                {
                    best = sol.residual;
                    best_m = m;
                    best_pair = sol;
                }
            }

            const bool changed = best_m != theta[p];
            theta[p] = best_m;
            terms[p] = fp * unit_phasor(phases, best_m);
            theta[0] = best_pair.first;
            theta[1] = best_pair.second;
            current = best;
            res.iterations = t;
            res.residual_trace.push_back(current);

            unchanged = changed ? 0 : unchanged + 1;
            if (unchanged >= free_count)
                break;
        }

        res.residual = current;
        const double incumbent = row_residual(target, digital, phases, initial);
        if (incumbent < current)
        {
            res.indices.assign(initial.begin(), initial.end());
            res.residual = incumbent;
            res.kept_initial = true;
        }
        return res;
    }

    // ---------------------------------------------------------------- alternating minimization

    LsFit ls_fbb(const CMatrix &analog, const CVector &v)
    {
        if (analog.rows() != v.size())
            throw std::invalid_argument("Analog matrix rows must match the codeword length.");
        if (analog.cols() < 1)
            throw std::invalid_argument("Analog matrix needs at least one column.");

        const CMatrix gram = analog.adjoint() * analog;
        const Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram, Eigen::EigenvaluesOnly);
        const double lmin = eig.eigenvalues().minCoeff();
        const double lmax = eig.eigenvalues().maxCoeff();

        LsFit fit;
        if (!(lmin > 0.0) || lmax / lmin > 1e12)
        {
            fit.rank_deficient = true;
            fit.digital = analog.completeOrthogonalDecomposition().solve(v);
        }
        else
        {
            fit.digital = gram.ldlt().solve(analog.adjoint() * v);
        }
        return fit;
    }

    FsAltMinRun run_fs_altmin(const Codeword &v, const FsAltMinConfig &config)
    {
        const auto N = static_cast<int>(v.size());
        const int n_rf = config.rf_chains;
        if (n_rf < 1 || n_rf > N)
            throw std::invalid_argument("Number of RF chains must lie in [1, N].");
        if (config.max_iterations < 0)
            throw std::invalid_argument("Maximum iteration count cannot be negative.");

        const PhaseSet phases(config.bits);
        const CVector &target = v.entries();

        if (n_rf == 1)
        {
            HybridCodeword hc = design_nrf1(v, phases);
            const double e = deviation(target, hc.analog() * hc.digital());
            return FsAltMinRun{std::move(hc), {e}, 0, true, false, e};
        }

        Rng rng(config.seed);
        PhaseIndexMatrix idx(N, n_rf);
        for (Eigen::Index n = 0; n < idx.rows(); ++n)
            for (Eigen::Index i = 0; i < idx.cols(); ++i)
                idx(n, i) = static_cast<int>(rng() % phases.size());

        std::vector<double> trace;
        bool rank_warning = false;
        bool converged = false;
        int outer = 0;
        CMatrix F = analog_matrix(phases, idx);
        CVector f_bar;

        for (int t = 1; t <= config.max_iterations; ++t)
        {
            LsFit fit = ls_fbb(F, target);
            rank_warning = rank_warning || fit.rank_deficient;
            trace.push_back((target - F * fit.digital).norm());
            outer = t;

            if (t > 1 && (fit.digital - f_bar).norm() < 1e-10)
            {
                f_bar = std::move(fit.digital);
                converged = true;
                break;
            }
            f_bar = std::move(fit.digital);

            std::vector<std::size_t> row(static_cast<std::size_t>(n_rf));
            for (Eigen::Index n = 0; n < N; ++n)
            {
                for (int i = 0; i < n_rf; ++i)
                    row[static_cast<std::size_t>(i)] = static_cast<std::size_t>(idx(n, i));
                const double incumbent = row_residual(target(n), f_bar, phases, row);

                if (n_rf == 2)
                {
                    const auto sol = solve_two_rf(TwoRfInstance::from_complex(target(n), f_bar(0), f_bar(1)), phases);
                    if (sol.residual < incumbent)
                    {
                        idx(n, 0) = static_cast<int>(sol.first);
                        idx(n, 1) = static_cast<int>(sol.second);
                    }
                }
                else
                {
                    const auto res = fs_row(target(n), f_bar, phases, row);
                    for (int i = 0; i < n_rf; ++i)
                        idx(n, i) = static_cast<int>(res.indices[static_cast<std::size_t>(i)]);
                }
            }
            F = analog_matrix(phases, idx);
        }

        if (!converged)
        {
            LsFit fit = ls_fbb(F, target);
            rank_warning = rank_warning || fit.rank_deficient;
            trace.push_back((target - F * fit.digital).norm());
            f_bar = std::move(fit.digital);
        }

        HybridCodeword hc = HybridCodeword::finalize(phases, idx, f_bar);
        const double e = deviation(target, hc.analog() * hc.digital());
        return FsAltMinRun{std::move(hc), std::move(trace), outer, converged, rank_warning, e};
    }

    HybridCodeword fs_altmin(const Codeword &v, const FsAltMinConfig &config)
    {
        return run_fs_altmin(v, config).codeword;
    }

} // namespace beamcode
