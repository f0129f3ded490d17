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

#ifndef BEAMCODE_IDEAL_CODEWORD_HPP
#define BEAMCODE_IDEAL_CODEWORD_HPP

#include <cstdint>
#include <vector>

#include "beamcode/array_core.hpp"
#include "beamcode/target_pattern.hpp"

namespace beamcode
{
    /// State of the per-angle phase search behind PS-ICD.
    ///
    /// The search maximizes g^H Q g with Q = A^H A over the phases of
    /// g_k = |g_k| exp(j phase_k). Only Q (K x K complex) is stored; the real
    /// 2K x 2K lifting R = [Re Q, -Im Q; Im Q, Re Q] is read through `lifted`.
    class PhaseUpdateWorkspace
    {
    public:
        // Terms of the single-entry subproblem for index k. With t the real
        // lifting of g and Psi = {0..2K-1} \ {k, k+K}:
        //   p = sum_{m in Psi} t_m R[k, m],    q = sum_{m in Psi} t_m R[k+K, m]
        //   d_k = sum_{m in Psi} t_m R[m, k],  d_kK = sum_{m in Psi} t_m R[m, k+K]
        struct Coefficients
        {
            double p = 0.0;
            double q = 0.0;
            double d_k = 0.0;
            double d_kK = 0.0;
        };

        PhaseUpdateWorkspace(const SteeringMatrix &steering, std::vector<double> magnitudes,
                             std::vector<double> initial_phases);

        int grid_size() const { return static_cast<int>(magnitudes_.size()); }

        // Entry (i, j) of R, 0 <= i, j < 2K.
        double lifted(int i, int j) const;

        Coefficients coefficients(int k) const;

        // r = sum_{m in Psi} d_m t_m; O(K^2), used to check the decomposition.
        double constant_term(int k) const;

        // Closed-form optimum for phase k with all others fixed. Zero-magnitude
        // entries and a vanishing denominator (< 1e-12) leave the phase as is.
        // Returns the phase held afterwards.
        double update_phase(int k);

        // g^H Q g, recomputed from scratch.
        double objective() const;

        const CVector &gains() const { return gains_; }
        const std::vector<double> &phases() const { return phases_; }
        const std::vector<double> &magnitudes() const { return magnitudes_; }

    private:
        CMatrix q_;
        std::vector<double> magnitudes_;
        std::vector<double> phases_;
        CVector gains_;
    };

    struct PsIcdConfig
    {
        int grid_size = 128;        // K
        long iterations = 2000;     // R_max; single-phase updates, cycling k = 0..K-1
        std::uint64_t seed = 0;
    };

    struct PsIcdRun
    {
        Codeword codeword;
        std::vector<double> phases;
        // objective after every update (only filled when requested)
        std::vector<double> objective_trace;
    };

    // Target magnitudes g(omega_k) on the steering grid.
    std::vector<double> sample_target(const TargetPattern &target, const SteeringMatrix &steering);

    // v = A g / ||A g||; throws NumericalError when ||A g / K|| < 1e-12.
    Codeword assemble_codeword(const SteeringMatrix &steering, const CVector &gains);

    PsIcdRun run_ps_icd(const TargetPattern &target, int n_antennas, const PsIcdConfig &config,
                        bool record_objective = false);

    Codeword ps_icd(const TargetPattern &target, int n_antennas, const PsIcdConfig &config);

    // Least-squares design with every extra phase fixed at zero.
    Codeword ls_icd(const TargetPattern &target, int n_antennas, int grid_size);

} // namespace beamcode

#endif
