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

#include "beamcode/ideal_codeword.hpp"

#include <cmath>
#include <stdexcept>

#include "beamcode/errors.hpp"
#include "beamcode/phase_set.hpp"
#include "beamcode/seeding.hpp"

namespace beamcode
{
    PhaseUpdateWorkspace::PhaseUpdateWorkspace(const SteeringMatrix &steering, std::vector<double> magnitudes,
                                               std::vector<double> initial_phases)
        : q_(steering.gram_columns()), magnitudes_(std::move(magnitudes)), phases_(std::move(initial_phases))
    {
        const auto K = static_cast<std::size_t>(steering.grid_size());
        if (magnitudes_.size() != K || phases_.size() != K)
            throw std::invalid_argument("Magnitude and phase vectors must match the steering grid size.");
        gains_.resize(static_cast<Eigen::Index>(K));
        for (std::size_t k = 0; k < K; ++k)
        {
            if (magnitudes_[k] < 0.0)
                throw std::invalid_argument("Target magnitudes must be non-negative.");
            gains_(static_cast<Eigen::Index>(k)) = std::polar(magnitudes_[k], phases_[k]);
        }
    }

    double PhaseUpdateWorkspace::lifted(int i, int j) const
    {
        const int K = grid_size();
        const bool lower = i >= K;
        const bool right = j >= K;
        const cdouble qv = q_(i % K, j % K);
        if (lower == right)
            return qv.real();
        return right ? -qv.imag() : qv.imag();
    }

    PhaseUpdateWorkspace::Coefficients PhaseUpdateWorkspace::coefficients(int k) const
    {
        const int K = grid_size();
        if (k < 0 || k >= K)
            throw std::out_of_range("Phase index out of range.");

        Coefficients c;
        for (int m = 0; m < 2 * K; ++m)
        {
            if (m == k || m == k + K)
                continue;
            const double t = m < K ? gains_(m).real() : gains_(m - K).imag();
            c.p += t * lifted(k, m);
            c.q += t * lifted(k + K, m);
            c.d_k += t * lifted(m, k);
            c.d_kK += t * lifted(m, k + K);
        }
        return c;
    }

    double PhaseUpdateWorkspace::constant_term(int k) const
    {
        const int K = grid_size();
        auto t = [&](int m) { return m < K ? gains_(m).real() : gains_(m - K).imag(); };
        double r = 0.0;
        for (int m = 0; m < 2 * K; ++m)
        {
            if (m == k || m == k + K)
                continue;
            double d_m = 0.0;
            for (int mm = 0; mm < 2 * K; ++mm)
            {
                if (mm == k || mm == k + K)
                    continue;
                d_m += t(mm) * lifted(mm, m);
            }
            r += d_m * t(m);
        }
        return r;
    }

    double PhaseUpdateWorkspace::update_phase(int k)
    {
        const auto idx = static_cast<std::size_t>(k);
        const double mag = magnitudes_.at(idx);
        if (mag == 0.0)
            return phases_[idx];

        const Coefficients c = coefficients(k);
        const double a = c.p + c.d_k;
        const double b = c.q + c.d_kK;
        const double den = std::hypot(a, b);
        if (den < 1e-12)
            return phases_[idx];

        const double alpha = mag * a / den;
        const double beta = mag * b / den;
        phases_[idx] = wrap_phase(std::atan2(beta, alpha));
        gains_(k) = cdouble(alpha, beta);
        return phases_[idx];
    }

    double PhaseUpdateWorkspace::objective() const
    {
        return (gains_.adjoint() * q_ * gains_)(0, 0).real();
    }

    std::vector<double> sample_target(const TargetPattern &target, const SteeringMatrix &steering)
    {
        std::vector<double> mags;
        mags.reserve(steering.grid().size());
        for (double omega : steering.grid())
            mags.push_back(target(omega));
        return mags;
    }

    Codeword assemble_codeword(const SteeringMatrix &steering, const CVector &gains)
    {
        const CVector v_hat = steering.matrix() * gains / static_cast<double>(steering.grid_size());
        const double norm = v_hat.norm();
        if (!(norm >= 1e-12) || !std::isfinite(norm))
            throw NumericalError("Codeword synthesis produced a vanishing vector; the target has no support on the steering grid.");
        return Codeword(v_hat / norm);
    }

    PsIcdRun run_ps_icd(const TargetPattern &target, int n_antennas, const PsIcdConfig &config, bool record_objective)
    {
        if (config.iterations < 0)
            throw std::invalid_argument("Iteration count cannot be negative.");
        const SteeringMatrix steering(n_antennas, config.grid_size);
        const int K = steering.grid_size();

        Rng rng(config.seed);
        std::vector<double> phases(static_cast<std::size_t>(K));
        for (auto &ph : phases)
            ph = uniform_real(rng, -kPi, kPi);

        PhaseUpdateWorkspace ws(steering, sample_target(target, steering), std::move(phases));

        std::vector<double> trace;
        if (record_objective)
            trace.reserve(static_cast<std::size_t>(config.iterations));
        for (long i = 0; i < config.iterations; ++i)
        {
            ws.update_phase(static_cast<int>(i % K));
            if (record_objective)
                trace.push_back(ws.objective());
        }

        return PsIcdRun{assemble_codeword(steering, ws.gains()), ws.phases(), std::move(trace)};
    }

    Codeword ps_icd(const TargetPattern &target, int n_antennas, const PsIcdConfig &config)
    {
        return run_ps_icd(target, n_antennas, config, false).codeword;
    }

    Codeword ls_icd(const TargetPattern &target, int n_antennas, int grid_size)
    {
        const SteeringMatrix steering(n_antennas, grid_size);
        const auto mags = sample_target(target, steering);
        CVector g(grid_size);
        for (int k = 0; k < grid_size; ++k)
            g(k) = mags[static_cast<std::size_t>(k)];
        return assemble_codeword(steering, g);
    }

} // namespace beamcode
