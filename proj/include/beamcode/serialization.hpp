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

#ifndef BEAMCODE_SERIALIZATION_HPP
#define BEAMCODE_SERIALIZATION_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "beamcode/array_core.hpp"
#include "beamcode/channel_sim.hpp"
#include "beamcode/codebook.hpp"
#include "beamcode/practical_codeword.hpp"

namespace beamcode
{
    using json = nlohmann::json;

    // {"n": N, "entries": [[re, im], ...]}
    json to_json(const Codeword &v);
    Codeword codeword_from_json(const json &j);

    // {"n_rf", "b", "analog_phase_indices": [[...], ...], "digital": [[re, im], ...]}
    json to_json(const HybridCodeword &h);
    HybridCodeword hybrid_from_json(const json &j);

    json to_json(const HierarchicalCodebook &book);
    HierarchicalCodebook codebook_from_json(const json &j);

    struct CampaignPoint
    {
        double snr_db;
        SuccessRate result;
    };

    // Header `snr_db,trials,successes,rate,ci95`.
    std::string campaign_to_csv(std::span<const CampaignPoint> points);
    json campaign_to_json(std::span<const CampaignPoint> points, bool include_trials);

    // Both throw IoError on failure.
    std::string read_text_file(const std::filesystem::path &path);
    void write_text_file(const std::filesystem::path &path, const std::string &content);

    json read_json_file(const std::filesystem::path &path);
    // Pretty-printed with a trailing newline.
    void write_json_file(const std::filesystem::path &path, const json &j);

} // namespace beamcode

#endif
