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

#include "beamcode/channel_sim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace beamcode
{
    namespace
    {
        // Radiated vectors of one codebook, resolved once per campaign.
        struct ActiveCodebook
        {
            int factor = 2;
            std::vector<std::vector<CVector>> layers;

            ActiveCodebook(const HierarchicalCodebook &book, bool use_practical) : factor(book.factor())
            {
                for (int s = 1; s <= book.layer_count(); ++s)
                {
                    std::vector<CVector> layer;
                    for (const auto &e : book.layer(s))
                        layer.push_back(e.active(use_practical).entries());
                    layers.push_back(std::move(layer));
                }
            }

            const CVector &at(int s, int index) const
            {
                return layers[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(index)];
            }
        };

        cdouble complex_normal(Rng &rng, double variance)
        {
            std::normal_distribution<double> dist(0.0, std::sqrt(0.5 * variance));
            const double re = dist(rng);
            const double im = dist(rng);
            return {re, im};
        }

        double measure_raw(const CVector &v, const CVector &w, const CMatrix &h, const LinkBudget &link, Rng &rng)
        {
            cdouble y = link.signal_amplitude * w.dot(h * v); // dot conjugates w
            if (link.noise_std > 0.0)
            {
                CVector eta(h.rows());
                for (Eigen::Index i = 0; i < eta.size(); ++i)
                    eta(i) = complex_normal(rng, link.noise_std * link.noise_std);
                y += w.dot(eta);
            }
            return std::norm(y);
        }

        SearchResult search(const ActiveCodebook &tx, const ActiveCodebook &rx, const Channel &channel,
                            const LinkBudget &link, Rng &rng)
        {
            const int M = tx.factor;
            const int tx_layers = static_cast<int>(tx.layers.size());
            const int rx_layers = static_cast<int>(rx.layers.size());
            const CMatrix &h = channel.matrix();

            SearchResult res;
            int t_sel = 0;
            int r_sel = 0;
            for (int s = 1; s <= rx_layers; ++s)
            {
                double best = -std::numeric_limits<double>::infinity();
                int bt = 0;
                int br = 0;
                for (int i = 0; i < M; ++i)
                {
                    for (int j = 0; j < M; ++j)
                    {
                        const int ti = t_sel * M + i;
                        const int rj = r_sel * M + j;
                        const double pwr = measure_raw(tx.at(s, ti), rx.at(s, rj), h, link, rng);
                        ++res.measurements;
                        if (pwr > best)
                        {
                            best = pwr;
                            bt = ti;
                            br = rj;
                        }
                    }
                }
                t_sel = bt;
                r_sel = br;
            }
            const CVector &w = rx.at(rx_layers, r_sel);
            for (int s = rx_layers + 1; s <= tx_layers; ++s)
            {
                double best = -std::numeric_limits<double>::infinity();
                int bt = 0;
                for (int i = 0; i < M; ++i)
                {
                    const int ti = t_sel * M + i;
                    const double pwr = measure_raw(tx.at(s, ti), w, h, link, rng);
                    ++res.measurements;
                    if (pwr > best)
                    {
                        best = pwr;
                        bt = ti;
                    }
                }
                t_sel = bt;
            }
            res.pair = BeamPair{t_sel, r_sel};
            return res;
        }

        BeamPair exhaustive(const ActiveCodebook &tx, const ActiveCodebook &rx, const Channel &channel)
        {
            const auto &tx_bottom = tx.layers.back();
            const auto &rx_bottom = rx.layers.back();
            BeamPair best_pair;
            double best = -1.0;
            for (std::size_t t = 0; t < tx_bottom.size(); ++t)
            {
                const CVector hv = channel.matrix() * tx_bottom[t];
                for (std::size_t r = 0; r < rx_bottom.size(); ++r)
                {
                    const double g = std::abs(rx_bottom[r].dot(hv));
                    if (g > best)
                    {
                        best = g;
                        best_pair = BeamPair{static_cast<int>(t), static_cast<int>(r)};
                    }
                }
            }
            return best_pair;
        }

        Channel draw_on_grid(int nt, int nr, int paths, Rng &rng)
        {
            std::vector<Path> ps;
            for (int l = 0; l < paths; ++l)
            {
                const cdouble gain = complex_normal(rng, 1.0);
                const auto ti = static_cast<int>(rng() % static_cast<std::uint64_t>(nt));
                const auto ri = static_cast<int>(rng() % static_cast<std::uint64_t>(nr));
                ps.push_back({gain, -1.0 + (2.0 * ti + 1.0) / nt, -1.0 + (2.0 * ri + 1.0) / nr});
            }
            return Channel::from_paths(nt, nr, std::move(ps));
        }
    } // namespace

    Channel Channel::from_paths(int tx_antennas, int rx_antennas, std::vector<Path> paths)
    {
        if (tx_antennas < 1 || rx_antennas < 1)
            throw std::invalid_argument("Antenna counts must be positive.");
        if (paths.empty())
            throw std::invalid_argument("A channel needs at least one path.");
        const double scale = std::sqrt(static_cast<double>(tx_antennas) * rx_antennas / static_cast<double>(paths.size()));
        CMatrix h = CMatrix::Zero(rx_antennas, tx_antennas);
        for (const auto &p : paths)
            h += p.gain * steering_vector(rx_antennas, p.aoa) * steering_vector(tx_antennas, p.aod).adjoint();
        h *= scale;
        return Channel(std::move(h), std::move(paths));
    }

    Channel draw_channel(int tx_antennas, int rx_antennas, int paths, Rng &rng)
    {
        if (paths < 1)
            throw std::invalid_argument("Path count must be at least 1.");
        std::vector<Path> ps;
        ps.reserve(static_cast<std::size_t>(paths));
        for (int l = 0; l < paths; ++l)
        {
            const cdouble gain = complex_normal(rng, 1.0);
            const double aod = uniform_real(rng, -1.0, 1.0);
            const double aoa = uniform_real(rng, -1.0, 1.0);
            ps.push_back({gain, aod, aoa});
        }
        return Channel::from_paths(tx_antennas, rx_antennas, std::move(ps));
    }

    Channel draw_channel(int tx_antennas, int rx_antennas, int paths, std::uint64_t seed)
    {
        Rng rng(seed);
        return draw_channel(tx_antennas, rx_antennas, paths, rng);
    }

    LinkBudget LinkBudget::from_snr_db(double snr_db)
    {
        if (std::isnan(snr_db))
            throw std::invalid_argument("SNR cannot be NaN.");
        if (std::isinf(snr_db))
            return snr_db > 0 ? LinkBudget{1.0, 0.0} : LinkBudget{0.0, 1.0};
        return LinkBudget{std::sqrt(std::pow(10.0, snr_db / 10.0)), 1.0};
    }

    double measure(const Codeword &v, const Codeword &w, const Channel &channel, const LinkBudget &link, Rng &rng)
    {
        if (static_cast<int>(v.size()) != channel.tx_antennas() || static_cast<int>(w.size()) != channel.rx_antennas())
            throw std::invalid_argument("Codeword lengths do not match the channel dimensions.");
        return measure_raw(v.entries(), w.entries(), channel.matrix(), link, rng);
    }

    double measure(const Codeword &v, const Codeword &w, const Channel &channel, double snr_db, Rng &rng)
    {
        return measure(v, w, channel, LinkBudget::from_snr_db(snr_db), rng);
    }

    void validate_training(const TrainingConfig &cfg, const Channel &channel)
    {
        if (!cfg.tx_codebook || !cfg.rx_codebook)
            throw std::invalid_argument("Training needs both transmit and receive codebooks.");
        const auto &tx = *cfg.tx_codebook;
        const auto &rx = *cfg.rx_codebook;
        if (tx.factor() != rx.factor())
            throw std::invalid_argument("Transmit and receive codebooks use different hierarchical factors.");
        if (tx.antennas() != channel.tx_antennas() || rx.antennas() != channel.rx_antennas())
            throw std::invalid_argument("Codebook sizes do not match the channel dimensions.");
        if (tx.antennas() < rx.antennas())
            throw std::invalid_argument("Hierarchical training assumes Nt >= Nr.");
        if (floor_log(tx.antennas(), tx.factor()) != tx.layer_count() ||
            floor_log(rx.antennas(), rx.factor()) != rx.layer_count())
            throw std::invalid_argument("Hierarchical training needs antenna counts that are powers of M.");
        if (cfg.use_practical && (!tx.has_practical() || !rx.has_practical()))
            throw std::invalid_argument("Practical training requested but a codebook has no practical codewords.");
    }

    SearchResult hierarchical_search(const TrainingConfig &cfg, const Channel &channel, Rng &rng)
    {
        validate_training(cfg, channel);
        const ActiveCodebook tx(*cfg.tx_codebook, cfg.use_practical);
        const ActiveCodebook rx(*cfg.rx_codebook, cfg.use_practical);
        return search(tx, rx, channel, LinkBudget::from_snr_db(cfg.snr_db), rng);
    }

    BeamPair exhaustive_best_pair(const TrainingConfig &cfg, const Channel &channel)
    {
        validate_training(cfg, channel);
        const ActiveCodebook tx(*cfg.tx_codebook, cfg.use_practical);
        const ActiveCodebook rx(*cfg.rx_codebook, cfg.use_practical);
        return exhaustive(tx, rx, channel);
    }

    SuccessRate success_rate(const TrainingConfig &cfg, bool record_trials)
    {
        if (cfg.trials < 1)
            throw std::invalid_argument("Trial count must be at least 1.");
        if (cfg.paths < 1)
            throw std::invalid_argument("Path count must be at least 1.");
        if (!cfg.tx_codebook || !cfg.rx_codebook)
            throw std::invalid_argument("Training needs both transmit and receive codebooks.");

        const int nt = cfg.tx_codebook->antennas();
        const int nr = cfg.rx_codebook->antennas();
        validate_training(cfg, Channel::from_paths(nt, nr, {Path{1.0, 0.0, 0.0}}));

        const ActiveCodebook tx(*cfg.tx_codebook, cfg.use_practical);
        const ActiveCodebook rx(*cfg.rx_codebook, cfg.use_practical);
        const LinkBudget link = LinkBudget::from_snr_db(cfg.snr_db);

        SuccessRate out;
        out.trials = cfg.trials;
        for (int t = 0; t < cfg.trials; ++t)
        {
            Rng channel_rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t), 0));
            Rng noise_rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t), 1));
            const Channel ch = cfg.angles == AngleMode::on_grid ? draw_on_grid(nt, nr, cfg.paths, channel_rng)
                                                                 : draw_channel(nt, nr, cfg.paths, channel_rng);
            const SearchResult sel = search(tx, rx, ch, link, noise_rng);
            const BeamPair best = exhaustive(tx, rx, ch);
            const bool ok = sel.pair == best;
            out.successes += ok ? 1 : 0;
            if (record_trials)
                out.records.push_back({t, sel.pair, best, ok});
        }
        out.rate = static_cast<double>(out.successes) / out.trials;
        out.ci95 = 1.96 * std::sqrt(out.rate * (1.0 - out.rate) / out.trials);
        return out;
    }

} // namespace beamcode
