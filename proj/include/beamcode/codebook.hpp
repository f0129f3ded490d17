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

#ifndef BEAMCODE_CODEBOOK_HPP
#define BEAMCODE_CODEBOOK_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "beamcode/array_core.hpp"
#include "beamcode/practical_codeword.hpp"

namespace beamcode
{
    enum class IdealMethod
    {
        ps_icd,
        ls_icd
    };

    std::string_view to_string(IdealMethod method);
    IdealMethod ideal_method_from_string(std::string_view name);

    struct IdealDesign
    {
        IdealMethod method = IdealMethod::ps_icd;
        int grid_size = 128;
        long iterations = 2000;
        std::uint64_t seed = 0;
    };

    struct HardwareDesign
    {
        int rf_chains = 4;
        int bits = 6;
        int max_iterations = 50;
    };

    struct CodebookEntry
    {
        int layer = 1;  // 1-based
        int index = 0;  // 0-based within the layer
        Interval coverage;
        Codeword ideal;
        std::optional<HybridCodeword> practical;

        // The vector actually radiated: the realized hybrid codeword when present.
        Codeword active(bool use_practical) const;
    };

    /// S layers; layer s holds M^s beams whose coverages tile [-1, 1] in
    /// order, each of width 2/M^s.
    class HierarchicalCodebook
    {
    public:
        HierarchicalCodebook(int antennas, int factor, IdealDesign design,
                             std::optional<HardwareDesign> hardware,
                             std::vector<std::vector<CodebookEntry>> layers);

        int antennas() const { return antennas_; }
        int factor() const { return factor_; }
        int layer_count() const { return static_cast<int>(layers_.size()); }
        const IdealDesign &design() const { return design_; }
        const std::optional<HardwareDesign> &hardware() const { return hardware_; }
        bool has_practical() const { return hardware_.has_value(); }

        // 1-based layer number
        const std::vector<CodebookEntry> &layer(int s) const;
        const CodebookEntry &entry(int s, int index) const { return layer(s).at(static_cast<std::size_t>(index)); }
        const std::vector<CodebookEntry> &bottom() const { return layers_.back(); }

    private:
        int antennas_;
        int factor_;
        IdealDesign design_;
        std::optional<HardwareDesign> hardware_;
        std::vector<std::vector<CodebookEntry>> layers_;
    };

    // Smallest S with M^S >= n.
    int ceil_log(long n, int base);
    // Largest S with M^S <= n.
    int floor_log(long n, int base);

    // Coverage of entry `index` (0-based) in layer s (1-based).
    Interval layer_coverage(int factor, int layer, int index);

    /// Builds every layer. Entries whose width is 2/N use the steering vector
    /// at the interval midpoint (quantized with a single RF chain when
    /// hardware is given); all others use the ideal design, then FS-AltMin.
    /// Each entry's seeds derive from (design.seed, layer, index).
    HierarchicalCodebook build_codebook(int antennas, int factor, const IdealDesign &design,
                                        const std::optional<HardwareDesign> &hardware = std::nullopt);

    // M*floor(log_M Nt) + (M^2 - M)*floor(log_M Nr)
    long training_test_count(long tx_antennas, long rx_antennas, int factor);

} // namespace beamcode

#endif
