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

#include "beamcode/codebook.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "beamcode/errors.hpp"
#include "beamcode/ideal_codeword.hpp"
#include "beamcode/seeding.hpp"
#include "beamcode/target_pattern.hpp"

namespace beamcode
{
    std::string_view to_string(IdealMethod method)
    {
        return method == IdealMethod::ps_icd ? "ps-icd" : "ls-icd";
    }

    IdealMethod ideal_method_from_string(std::string_view name)
    {
        if (name == "ps-icd" || name == "ps_icd")
            return IdealMethod::ps_icd;
        if (name == "ls-icd" || name == "ls_icd")
            return IdealMethod::ls_icd;
        throw std::invalid_argument("Unknown ideal design method '" + std::string(name) + "'.");
    }

    Codeword CodebookEntry::active(bool use_practical) const
    {
        if (use_practical && practical)
            return practical->realized();
        return ideal;
    }

    HierarchicalCodebook::HierarchicalCodebook(int antennas, int factor, IdealDesign design,
                                               std::optional<HardwareDesign> hardware,
                                               std::vector<std::vector<CodebookEntry>> layers)
        : antennas_(antennas), factor_(factor), design_(design), hardware_(hardware), layers_(std::move(layers))
    {
        if (factor_ < 2)
            throw std::invalid_argument("Hierarchical factor must be at least 2.");
        if (static_cast<int>(layers_.size()) != ceil_log(antennas_, factor_))
            throw std::invalid_argument("Codebook layer count must equal ceil(log_M N).");
        long expected = 1;
        for (const auto &layer : layers_)
        {
            expected *= factor_;
            if (static_cast<long>(layer.size()) != expected)
                throw std::invalid_argument("Codebook layer s must hold M^s entries.");
            for (const auto &e : layer)
            {
                if (static_cast<int>(e.ideal.size()) != antennas_)
                    throw std::invalid_argument("Codebook entry length does not match the antenna count.");
                if (hardware_.has_value() != e.practical.has_value())
                    throw std::invalid_argument("Practical codewords must be present exactly when hardware is set.");
            }
        }
    }

    const std::vector<CodebookEntry> &HierarchicalCodebook::layer(int s) const
    {
        if (s < 1 || s > layer_count())
            throw std::out_of_range("Codebook layer index out of range.");
        return layers_[static_cast<std::size_t>(s - 1)];
    }

    int ceil_log(long n, int base)
    {
        if (n < 1 || base < 2)
            throw std::invalid_argument("ceil_log needs n >= 1 and base >= 2.");
        int s = 0;
        for (long p = 1; p < n; p *= base)
            ++s;
        return s;
    }

    int floor_log(long n, int base)
    {
        if (n < 1 || base < 2)
            throw std::invalid_argument("floor_log needs n >= 1 and base >= 2.");
        int s = 0;
        for (long p = base; p <= n; p *= base)
            ++s;
        return s;
    }

    Interval layer_coverage(int factor, int layer, int index)
    {
        const double count = std::pow(static_cast<double>(factor), layer);
        return Interval{-1.0 + 2.0 * index / count, -1.0 + 2.0 * (index + 1) / count};
    }

    HierarchicalCodebook build_codebook(int antennas, int factor, const IdealDesign &design,
                                        const std::optional<HardwareDesign> &hardware)
    {
        if (antennas < 2)
            throw std::invalid_argument("A hierarchical codebook needs at least two antennas.");
        if (factor < 2)
            throw std::invalid_argument("Hierarchical factor must be at least 2.");

        const int layers = ceil_log(antennas, factor);
        std::vector<std::vector<CodebookEntry>> out;
        out.reserve(static_cast<std::size_t>(layers));

        long count = 1;
        for (int s = 1; s <= layers; ++s)
        {
            count *= factor;
            std::vector<CodebookEntry> layer;
            layer.reserve(static_cast<std::size_t>(count));
            const bool full_resolution = count == antennas;

            for (int m = 0; m < count; ++m)
            {
                const Interval cov = layer_coverage(factor, s, m);
                const std::uint64_t seed = derive_seed(design.seed, static_cast<std::uint64_t>(s),
                                                       static_cast<std::uint64_t>(m));
                try
                {
                    if (full_resolution)
                    {
                        Codeword ideal(steering_vector(antennas, cov.midpoint()));
                        std::optional<HybridCodeword> practical;
                        if (hardware)
                            practical = design_nrf1(ideal, PhaseSet(hardware->bits));
                        layer.push_back({s, m, cov, std::move(ideal), std::move(practical)});
                        continue;
                    }

                    const TargetPattern target = TargetPattern::rect(cov);
                    Codeword ideal = design.method == IdealMethod::ps_icd
                                         ? ps_icd(target, antennas, PsIcdConfig{design.grid_size, design.iterations, seed})
                                         : ls_icd(target, antennas, design.grid_size);
                    std::optional<HybridCodeword> practical;
                    if (hardware)
                    {
                        const FsAltMinConfig hw{hardware->rf_chains, hardware->bits, hardware->max_iterations,
                                                derive_seed(seed, 0x68770000u)};
                        practical = fs_altmin(ideal, hw);
                    }
                    layer.push_back({s, m, cov, std::move(ideal), std::move(practical)});
                }
                catch (const NumericalError &e)
                {
                    throw NumericalError("Codebook layer " + std::to_string(s) + ", entry " + std::to_string(m) +
                                         ": " + e.what());
                }
            }
            out.push_back(std::move(layer));
        }
        return HierarchicalCodebook(antennas, factor, design, hardware, std::move(out));
    }

    long training_test_count(long tx_antennas, long rx_antennas, int factor)
    {
        if (tx_antennas < 1 || rx_antennas < 1 || factor < 2)
            throw std::invalid_argument("Test count needs positive antenna counts and M >= 2.");
        const long m = factor;
        return m * floor_log(tx_antennas, factor) + (m * m - m) * floor_log(rx_antennas, factor);
    }

} // namespace beamcode
