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

#include "beamcode/serialization.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "beamcode/errors.hpp"
#include "beamcode/numfmt.hpp"

namespace beamcode
{
    namespace
    {
        json complex_array(const CVector &v)
        {
            json arr = json::array();
            for (Eigen::Index i = 0; i < v.size(); ++i)
                arr.push_back(json::array({v(i).real(), v(i).imag()}));
            return arr;
        }

        CVector complex_vector(const json &arr)
        {
            if (!arr.is_array())
                throw std::invalid_argument("Expected an array of [re, im] pairs.");
            CVector v(static_cast<Eigen::Index>(arr.size()));
            for (std::size_t i = 0; i < arr.size(); ++i)
            {
                const auto &pair = arr[i];
                if (!pair.is_array() || pair.size() != 2)
                    throw std::invalid_argument("Complex entries must be [re, im] pairs.");
                v(static_cast<Eigen::Index>(i)) = cdouble(pair[0].get<double>(), pair[1].get<double>());
            }
            return v;
        }

        json practical_or_null(const CodebookEntry &e)
        {
            return e.practical ? to_json(*e.practical) : json(nullptr);
        }
    } // namespace

    json to_json(const Codeword &v)
    {
        return json{{"n", v.size()}, {"entries", complex_array(v.entries())}};
    }

    Codeword codeword_from_json(const json &j)
    {
        try
        {
            const auto n = j.at("n").get<long>();
            CVector v = complex_vector(j.at("entries"));
            if (v.size() != n)
                throw std::invalid_argument("Codeword length does not match \"n\".");
            return Codeword(std::move(v));
        }
        catch (const json::exception &e)
        {
            throw std::invalid_argument(std::string("Malformed codeword JSON: ") + e.what());
        }
    }

    json to_json(const HybridCodeword &h)
    {
        json rows = json::array();
        const auto &idx = h.analog_indices();
        for (Eigen::Index n = 0; n < idx.rows(); ++n)
        {
            json row = json::array();
            for (Eigen::Index i = 0; i < idx.cols(); ++i)
                row.push_back(idx(n, i));
            rows.push_back(std::move(row));
        }
        return json{{"n_rf", h.rf_chains()},
                    {"b", h.bits()},
                    {"analog_phase_indices", std::move(rows)},
                    {"digital", complex_array(h.digital())}};
    }

    HybridCodeword hybrid_from_json(const json &j)
    {
        try
        {
            const int n_rf = j.at("n_rf").get<int>();
            const int bits = j.at("b").get<int>();
            const auto &rows = j.at("analog_phase_indices");
            if (!rows.is_array() || rows.empty())
                throw std::invalid_argument("\"analog_phase_indices\" must be a non-empty array.");
            PhaseIndexMatrix idx(static_cast<Eigen::Index>(rows.size()), n_rf);
            for (std::size_t n = 0; n < rows.size(); ++n)
            {
                if (!rows[n].is_array() || static_cast<int>(rows[n].size()) != n_rf)
                    throw std::invalid_argument("Every analog row must hold n_rf indices.");
                for (int i = 0; i < n_rf; ++i)
                    idx(static_cast<Eigen::Index>(n), i) = rows[n][static_cast<std::size_t>(i)].get<int>();
            }
            return HybridCodeword(PhaseSet(bits), std::move(idx), complex_vector(j.at("digital")));
        }
        catch (const json::exception &e)
        {
            throw std::invalid_argument(std::string("Malformed hybrid codeword JSON: ") + e.what());
        }
    }

    json to_json(const HierarchicalCodebook &book)
    {
        json layers = json::array();
        for (int s = 1; s <= book.layer_count(); ++s)
        {
            json layer = json::array();
            for (const auto &e : book.layer(s))
            {
                layer.push_back(json{{"layer", e.layer},
                                     {"index", e.index},
                                     {"coverage", json::array({e.coverage.lo, e.coverage.hi})},
                                     {"ideal", to_json(e.ideal)},
                                     {"practical", practical_or_null(e)}});
            }
            layers.push_back(std::move(layer));
        }

        const auto &d = book.design();
        json hw = nullptr;
        if (book.hardware())
            hw = json{{"n_rf", book.hardware()->rf_chains},
                      {"b", book.hardware()->bits},
                      {"t_max", book.hardware()->max_iterations}};

        return json{{"format", "beamcode-codebook"},
                    {"n", book.antennas()},
                    {"m", book.factor()},
                    {"s", book.layer_count()},
                    {"seed", d.seed},
                    {"design", {{"method", std::string(to_string(d.method))}, {"k", d.grid_size}, {"r_max", d.iterations}}},
                    {"hw", std::move(hw)},
                    {"layers", std::move(layers)}};
    }

    HierarchicalCodebook codebook_from_json(const json &j)
    {
        try
        {
            IdealDesign design;
            design.seed = j.at("seed").get<std::uint64_t>();
            const auto &d = j.at("design");
            design.method = ideal_method_from_string(d.at("method").get<std::string>());
            design.grid_size = d.at("k").get<int>();
            design.iterations = d.at("r_max").get<long>();

            std::optional<HardwareDesign> hw;
            if (!j.at("hw").is_null())
            {
                const auto &h = j.at("hw");
                hw = HardwareDesign{h.at("n_rf").get<int>(), h.at("b").get<int>(), h.at("t_max").get<int>()};
            }

            std::vector<std::vector<CodebookEntry>> layers;
            for (const auto &layer_json : j.at("layers"))
            {
                std::vector<CodebookEntry> layer;
                for (const auto &e : layer_json)
                {
                    const auto &cov = e.at("coverage");
                    std::optional<HybridCodeword> practical;
                    if (!e.at("practical").is_null())
                        practical = hybrid_from_json(e.at("practical"));
                    layer.push_back(CodebookEntry{e.at("layer").get<int>(), e.at("index").get<int>(),
                                                  Interval{cov.at(0).get<double>(), cov.at(1).get<double>()},
                                                  codeword_from_json(e.at("ideal")), std::move(practical)});
                }
                layers.push_back(std::move(layer));
            }
            HierarchicalCodebook book(j.at("n").get<int>(), j.at("m").get<int>(), design, hw, std::move(layers));
            if (book.layer_count() != j.at("s").get<int>())
                throw std::invalid_argument("Codebook layer count does not match \"s\".");
            return book;
        }
        catch (const json::exception &e)
        {
            throw std::invalid_argument(std::string("Malformed codebook JSON: ") + e.what());
        }
    }

    std::string campaign_to_csv(std::span<const CampaignPoint> points)
    {
        std::string out = "snr_db,trials,successes,rate,ci95\n";
        for (const auto &p : points)
        {
            out += format_number(p.snr_db, 12) + ',' + std::to_string(p.result.trials) + ',' +
                   std::to_string(p.result.successes) + ',' + format_number(p.result.rate, 12) + ',' +
                   format_number(p.result.ci95, 12) + '\n';
        }
        return out;
    }

    json campaign_to_json(std::span<const CampaignPoint> points, bool include_trials)
    {
        json arr = json::array();
        for (const auto &p : points)
        {
            // JSON has no infinity; the SNR is kept as text for the noise-free hooks.
            json point{{"snr_db", std::isfinite(p.snr_db) ? json(p.snr_db) : json(format_number(p.snr_db, 12))},
                       {"trials", p.result.trials},
                       {"successes", p.result.successes},
                       {"rate", p.result.rate},
                       {"ci95", p.result.ci95}};
            if (include_trials)
            {
                json recs = json::array();
                for (const auto &r : p.result.records)
                    recs.push_back(json{{"trial", r.trial},
                                        {"selected", {r.selected.tx, r.selected.rx}},
                                        {"best", {r.best.tx, r.best.rx}},
                                        {"success", r.success}});
                point["records"] = std::move(recs);
            }
            arr.push_back(std::move(point));
        }
        return json{{"points", std::move(arr)}};
    }

    std::string read_text_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("Cannot open '" + path.string() + "' for reading.");
        std::ostringstream ss;
        ss << in.rdbuf();
        if (in.bad())
            throw IoError("Failed while reading '" + path.string() + "'.");
        return ss.str();
    }

    void write_text_file(const std::filesystem::path &path, const std::string &content)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("Cannot open '" + path.string() + "' for writing.");
        out << content;
        out.flush();
        if (!out)
            throw IoError("Failed while writing '" + path.string() + "'.");
    }

    json read_json_file(const std::filesystem::path &path)
    {
        const std::string text = read_text_file(path);
        try
        {
            return json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw IoError("'" + path.string() + "' is not valid JSON: " + e.what());
        }
    }

    void write_json_file(const std::filesystem::path &path, const json &j)
    {
        write_text_file(path, j.dump(2) + "\n");
    }

} // namespace beamcode
