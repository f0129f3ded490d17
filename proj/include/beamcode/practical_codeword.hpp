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

#ifndef BEAMCODE_PRACTICAL_CODEWORD_HPP
#define BEAMCODE_PRACTICAL_CODEWORD_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "beamcode/array_core.hpp"
#include "beamcode/phase_set.hpp"

namespace beamcode
{
    using PhaseIndexMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

    /// v_p = F_RF * f_BB with every F_RF entry exp(j*phi), phi in a PhaseSet.
    ///
    /// The analog part is held as 0-based indices into the phase set, so the
    /// quantization constraint holds exactly. The digital vector is stored
    /// already scaled so that ||F_RF f_BB|| = 1 (checked to 1e-9).
    class HybridCodeword
    {
    public:
        HybridCodeword(PhaseSet phases, PhaseIndexMatrix analog_indices, CVector digital);

        // Rescales `digital` so the realized vector has unit norm.
        static HybridCodeword finalize(PhaseSet phases, PhaseIndexMatrix analog_indices,
                                       const CVector &digital);

        int antennas() const { return static_cast<int>(indices_.rows()); }
        int rf_chains() const { return static_cast<int>(indices_.cols()); }
        int bits() const { return phases_.bits(); }
        const PhaseSet &phase_set() const { return phases_; }
        const PhaseIndexMatrix &analog_indices() const { return indices_; }
        const CVector &digital() const { return digital_; }

        CMatrix analog() const;
        Codeword realized() const;

    private:
        PhaseSet phases_;
        PhaseIndexMatrix indices_;
        CVector digital_;
    };

    // Builds the N x N_RF unit-modulus matrix for a set of phase indices.
    CMatrix analog_matrix(const PhaseSet &phases, const PhaseIndexMatrix &indices);

    // E = ||v - vp||.
    double deviation(const CVector &v, const CVector &vp);
    inline double deviation(const Codeword &v, const Codeword &vp) { return deviation(v.entries(), vp.entries()); }

    // Single RF chain: quantize every entry's phase, digital = 1/sqrt(N).
    HybridCodeword design_nrf1(const Codeword &v, const PhaseSet &phases);

    /// One antenna row with two RF chains: match alpha*exp(j beta) with
    /// zeta1*exp(j(psi1 + theta1)) + zeta2*exp(j(psi2 + theta2)).
    struct TwoRfInstance
    {
        double alpha = 0.0;
        double beta = 0.0;
        double zeta1 = 0.0;
        double psi1 = 0.0;
        double zeta2 = 0.0;
        double psi2 = 0.0;

        static TwoRfInstance from_complex(cdouble target, cdouble first, cdouble second);
    };

    struct PhasePair
    {
        double theta1;
        double theta2;
    };

    struct TwoRfSolution
    {
        std::size_t first;
        std::size_t second;
        double residual;
    };

    double two_rf_residual(const TwoRfInstance &inst, double theta1, double theta2);

    // The two continuous solutions of the triangle equations. Arccos arguments
    // are clamped to [-1, 1], which covers targets outside the feasible range.
    std::array<PhasePair, 2> two_rf_branches(const TwoRfInstance &inst);

    // Continuous optimum (no quantization), degenerate magnitudes included.
    PhasePair solve_two_rf_continuous(const TwoRfInstance &inst);

    // Quantizes both branches, keeps the one with the smaller residual.
    TwoRfSolution solve_two_rf(const TwoRfInstance &inst, const PhaseSet &phases);

    struct FsRowResult
    {
        std::vector<std::size_t> indices; // one per RF chain
        double residual = 0.0;            // |target - sum_i f_i exp(j theta_i)|
        int iterations = 0;
        long evaluations = 0;             // candidate residual evaluations, 2^b per iteration
        bool kept_initial = false;        // the warm-start row was already better
        std::vector<double> residual_trace; // best residual after each iteration
    };

    // Residual of a full row of phase indices.
    double row_residual(cdouble target, const CVector &digital, const PhaseSet &phases,
                        std::span<const std::size_t> indices);

    /// Fast cyclic search for one analog row with N_RF >= 3 chains.
    ///
    /// Chains 3..N_RF are revisited cyclically; for each the search tries every
    /// phase in the set, solving chains 1 and 2 in closed form, and keeps the
    /// best. It stops once a whole cycle leaves chains 3..N_RF unchanged, or
    /// after 64*(N_RF - 2) iterations. `initial` warm-starts chains 3..N_RF and,
    /// as a complete row, serves as the incumbent returned if nothing beats it.
    FsRowResult fs_row(cdouble target, const CVector &digital, const PhaseSet &phases,
                       std::span<const std::size_t> initial);

    struct LsFit
    {
        CVector digital;
        bool rank_deficient = false; // Gram condition number above 1e12, pseudo-inverse used
    };

    // argmin_f ||v - F f|| via (F^H F)^{-1} F^H v.
    LsFit ls_fbb(const CMatrix &analog, const CVector &v);

    struct FsAltMinConfig
    {
        int rf_chains = 4;
        int bits = 6;
        int max_iterations = 50; // T_max
        std::uint64_t seed = 0;
    };

    struct FsAltMinRun
    {
        HybridCodeword codeword;
        // ||v - F_RF f_BB|| after every least-squares step, before normalization
        std::vector<double> residual_trace;
        int outer_iterations = 0;
        bool converged = false; // digital vector reached a fixed point before T_max
        bool rank_warning = false;
        double deviation = 0.0; // ||v - v_p|| after normalization
    };

    FsAltMinRun run_fs_altmin(const Codeword &v, const FsAltMinConfig &config);
    HybridCodeword fs_altmin(const Codeword &v, const FsAltMinConfig &config);

} // namespace beamcode

#endif
