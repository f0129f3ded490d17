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

#ifndef BEAMCODE_CHANNEL_SIM_HPP
#define BEAMCODE_CHANNEL_SIM_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "beamcode/array_core.hpp"
#include "beamcode/codebook.hpp"
#include "beamcode/seeding.hpp"

namespace beamcode
{
    struct Path
    {
        cdouble gain;
        double aod; // departure, cosine domain
        double aoa; // arrival, cosine domain
    };

    /// Sparse multipath channel
    /// H = sqrt(Nt*Nr/L) * sum_l gain_l * a(Nr, aoa_l) * a(Nt, aod_l)^H.
    class Channel
    {
    public:
        static Channel from_paths(int tx_antennas, int rx_antennas, std::vector<Path> paths);

        int tx_antennas() const { return static_cast<int>(h_.cols()); }
        int rx_antennas() const { return static_cast<int>(h_.rows()); }
        const CMatrix &matrix() const { return h_; }
        const std::vector<Path> &paths() const { return paths_; }

    private:
        Channel(CMatrix h, std::vector<Path> paths) : h_(std::move(h)), paths_(std::move(paths)) {}

        CMatrix h_;
        std::vector<Path> paths_;
    };

    // Gains i.i.d. CN(0, 1), angles i.i.d. uniform on [-1, 1].
    Channel draw_channel(int tx_antennas, int rx_antennas, int paths, Rng &rng);
    Channel draw_channel(int tx_antennas, int rx_antennas, int paths, std::uint64_t seed);

    /// Transmit power and noise level for one SNR point. Noise variance is
    /// fixed at 1 and P = 10^(snr/10); +inf disables noise (P = 1), -inf
    /// disables the signal.
    struct LinkBudget
    {
        double signal_amplitude = 1.0; // sqrt(P)
        double noise_std = 1.0;        // sigma

        static LinkBudget from_snr_db(double snr_db);
    };

    // |y|^2 with y = sqrt(P) w^H H v + w^H eta, eta ~ CN(0, sigma^2 I).
    double measure(const Codeword &v, const Codeword &w, const Channel &channel,
                   const LinkBudget &link, Rng &rng);
    double measure(const Codeword &v, const Codeword &w, const Channel &channel, double snr_db,
                   Rng &rng);

    enum class AngleMode
    {
        continuous, // uniform on [-1, 1]
        on_grid     // bottom-layer beam midpoints
    };

    struct TrainingConfig
    {
        double snr_db = 0.0;
        int trials = 500;
        std::uint64_t seed = 0;
        int paths = 1;
        bool use_practical = false;
        AngleMode angles = AngleMode::continuous;
        std::shared_ptr<const HierarchicalCodebook> tx_codebook;
        std::shared_ptr<const HierarchicalCodebook> rx_codebook;
    };

    struct BeamPair
    {
        int tx = 0; // bottom-layer indices
        int rx = 0;

        bool operator==(const BeamPair &) const = default;
    };

    struct SearchResult
    {
        BeamPair pair;
        long measurements = 0;
    };

    // Throws std::invalid_argument when the codebooks do not fit the channel
    // or each other.
    void validate_training(const TrainingConfig &cfg, const Channel &channel);

    /// Layer-by-layer descent using measured powers only.
    ///
    /// For the first floor(log_M Nr) layers all M x M child pairs are
    /// measured (M^2 = M transmit + (M^2 - M) receive tests); the remaining
    /// transmit layers test M children with the receive beam held at its
    /// final selection. The total equals training_test_count(Nt, Nr, M).
    SearchResult hierarchical_search(const TrainingConfig &cfg, const Channel &channel, Rng &rng);

    // argmax over bottom-layer pairs of |w^H H v| (noise-free).
    BeamPair exhaustive_best_pair(const TrainingConfig &cfg, const Channel &channel);

    struct TrialRecord
    {
        int trial = 0;
        BeamPair selected;
        BeamPair best;
        bool success = false;
    };

    struct SuccessRate
    {
        int trials = 0;
        int successes = 0;
        double rate = 0.0;
        double ci95 = 0.0; // 1.96 * sqrt(rate (1 - rate) / trials)
        std::vector<TrialRecord> records;
    };

    // Trial t draws its channel and noise from streams derived from (seed, t).
    SuccessRate success_rate(const TrainingConfig &cfg, bool record_trials = false);

} // namespace beamcode

#endif
