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

#include "beamcode/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <locale>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"

#include "beamcode/array_core.hpp"
#include "beamcode/channel_sim.hpp"
#include "beamcode/codebook.hpp"
#include "beamcode/errors.hpp"
#include "beamcode/ideal_codeword.hpp"
#include "beamcode/numfmt.hpp"
#include "beamcode/practical_codeword.hpp"
#include "beamcode/serialization.hpp"
#include "beamcode/target_pattern.hpp"

namespace beamcode::cli
{
    namespace
    {
        constexpr int kDigits = 12;

        std::string num(double x) { return format_number(x, kDigits); }

        std::string_view trim(std::string_view s)
        {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.remove_suffix(1);
            return s;
        }

        // Locale-independent; accepts inf, -inf and a leading '+'.
        double parse_real(std::string_view text)
        {
            std::string_view s = trim(text);
            if (!s.empty() && s.front() == '+')
                s.remove_prefix(1);
            double value = 0.0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
            if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw std::invalid_argument("Cannot parse '" + std::string(text) + "' as a number.");
            return value;
        }

        long parse_integer(std::string_view text)
        {
            const std::string_view s = trim(text);
            long value = 0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
            if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw std::invalid_argument("Cannot parse '" + std::string(text) + "' as an integer.");
            return value;
        }

        std::vector<std::string_view> split(std::string_view s, char sep)
        {
            std::vector<std::string_view> parts;
            std::size_t start = 0;
            while (true)
            {
                const auto pos = s.find(sep, start);
                parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
                if (pos == std::string_view::npos)
                    break;
                start = pos + 1;
            }
            return parts;
        }

        // "lo:hi"
        Interval parse_interval(const std::string &text)
        {
            const auto parts = split(text, ':');
            if (parts.size() != 2)
                throw std::invalid_argument("Coverage must be written as lo:hi, got '" + text + "'.");
            Interval iv{parse_real(parts[0]), parse_real(parts[1])};
            validate_interval(iv);
            return iv;
        }

        // "a,b,c" or an inclusive range "lo:hi:step".
        std::vector<double> parse_real_list(const std::string &text)
        {
            std::vector<double> values;
            if (text.find(':') != std::string::npos)
            {
                const auto parts = split(text, ':');
                if (parts.size() != 3)
                    throw std::invalid_argument("Ranges must be written as lo:hi:step, got '" + text + "'.");
                const double lo = parse_real(parts[0]);
                const double hi = parse_real(parts[1]);
                const double step = parse_real(parts[2]);
                if (!std::isfinite(lo) || !std::isfinite(hi) || !(step > 0.0) || hi < lo)
                    throw std::invalid_argument("Range '" + text + "' needs finite lo <= hi and step > 0.");
                const long count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
                for (long i = 0; i < count; ++i)
                    values.push_back(lo + static_cast<double>(i) * step);
                return values;
            }
            for (const auto part : split(text, ','))
                values.push_back(parse_real(part));
            return values;
        }

        std::vector<int> parse_int_list(const std::string &text)
        {
            std::vector<int> values;
            for (const auto part : split(text, ','))
                values.push_back(static_cast<int>(parse_integer(part)));
            return values;
        }

        std::uint64_t env_seed()
        {
            const char *raw = std::getenv("BEAM_SEED");
            if (raw == nullptr || *raw == '\0')
                return 0;
            const std::string_view s = trim(raw);
            std::uint64_t value = 0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
            if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw std::invalid_argument("BEAM_SEED must be a non-negative integer, got '" + std::string(raw) + "'.");
            return value;
        }

        std::vector<CustomSample> read_custom_samples(const std::string &path)
        {
            std::istringstream in(read_text_file(path));
            std::vector<CustomSample> samples;
            std::string line;
            bool first = true;
            while (std::getline(in, line))
            {
                const auto body = trim(line);
                if (body.empty() || body.front() == '#')
                    continue;
                const auto cols = split(body, ',');
                if (cols.size() != 2)
                    throw std::invalid_argument("Custom target rows need two columns: omega,value.");
                if (first && cols[0].find_first_of("0123456789") == std::string_view::npos)
                {
                    first = false;
                    continue; // header
                }
                first = false;
                samples.push_back({parse_real(cols[0]), parse_real(cols[1])});
            }
            return samples;
        }

        // Either format is accepted; hybrid files are read through their realized vector.
        Codeword load_codeword(const std::string &path)
        {
            const json j = read_json_file(path);
            if (j.contains("analog_phase_indices"))
                return hybrid_from_json(j).realized();
            return codeword_from_json(j);
        }

        std::shared_ptr<const HierarchicalCodebook> load_codebook(const std::string &path)
        {
            return std::make_shared<const HierarchicalCodebook>(codebook_from_json(read_json_file(path)));
        }

        std::filesystem::path suffixed(const std::string &path, const std::string &tag)
        {
            std::filesystem::path p(path);
            const auto ext = p.extension();
            p.replace_extension();
            p += "." + tag;
            p += ext;
            return p;
        }

        double median(std::vector<double> values)
        {
            std::sort(values.begin(), values.end());
            const std::size_t n = values.size();
            return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
        }

        void add_seed(CLI::App *sub, std::uint64_t &seed)
        {
            sub->add_option("--seed", seed, "Master seed (default: BEAM_SEED or 0)")->capture_default_str();
        }

        // ---------------------------------------------------------------- commands

        struct DesignIdealArgs
        {
            std::string method = "ps-icd";
            int n = 16;
            std::string target = "rect";
            std::string cover = "-1:0";
            int k = 128;
            long rmax = 2000;
            std::string step_heights = "1,2";
            double step_split = 0.5;
            std::string samples;
            std::size_t mse_grid = kDefaultMseGrid;
            std::size_t points = 2048;
            std::string out = "codeword.json";
            std::string pattern = "pattern.csv";
            std::uint64_t seed = 0;
        };

        TargetPattern make_target(const DesignIdealArgs &a)
        {
            switch (target_kind_from_string(a.target))
            {
            case TargetKind::rect:
                return TargetPattern::rect(parse_interval(a.cover));
            case TargetKind::triangular:
                return TargetPattern::triangular(parse_interval(a.cover));
            case TargetKind::step:
            {
                const auto h = parse_real_list(a.step_heights);
                if (h.size() != 2)
                    throw std::invalid_argument("--step-heights needs two values h1,h2.");
                return TargetPattern::step(parse_interval(a.cover), StepParams{h[0], h[1], a.step_split});
            }
            case TargetKind::custom:
                if (a.samples.empty())
                    throw std::invalid_argument("--target custom needs --samples FILE.");
                return TargetPattern::custom(read_custom_samples(a.samples));
            }
            throw std::invalid_argument("Unknown target kind.");
        }

        void cmd_design_ideal(const DesignIdealArgs &a, std::ostream &out)
        {
            const TargetPattern target = make_target(a);
            const IdealMethod method = ideal_method_from_string(a.method);
            const Codeword v = method == IdealMethod::ps_icd
                                   ? ps_icd(target, a.n, PsIcdConfig{a.k, a.rmax, a.seed})
                                   : ls_icd(target, a.n, a.k);
            const double mse = main_lobe_mse(v, target, a.mse_grid);

            write_json_file(a.out, to_json(v));
            const auto grid = uniform_grid(a.points);
            write_text_file(a.pattern, pattern_to_csv(sample_pattern(v, grid)));

            out << "method=" << to_string(method) << " n=" << a.n << " target=" << to_string(target.kind())
                << " amplitude=" << num(target.amplitude()) << '\n';
            out << "main_lobe_mse=" << num(mse) << '\n';
        }

        struct DesignPracticalArgs
        {
            std::string in;
            std::string nrf = "4";
            int b = 6;
            int tmax = 50;
            int repeats = 1;
            std::string out = "hybrid.json";
            std::string report;
            std::uint64_t seed = 0;
        };

        void cmd_design_practical(const DesignPracticalArgs &a, std::ostream &out)
        {
            const Codeword v = load_codeword(a.in);
            const auto chains = parse_int_list(a.nrf);
            if (a.repeats < 1)
                throw std::invalid_argument("--repeats must be at least 1.");

            std::ostringstream rep;
            rep.imbue(std::locale::classic());
            rep << "# fs-altmin n=" << v.size() << " b=" << a.b << " tmax=" << a.tmax << '\n';
            std::vector<double> medians;
            for (const int nrf : chains)
            {
                std::vector<double> deviations;
                for (int r = 0; r < a.repeats; ++r)
                {
                    const std::uint64_t seed = a.repeats == 1 ? a.seed : derive_seed(a.seed, static_cast<std::uint64_t>(r));
                    const FsAltMinRun run = run_fs_altmin(v, FsAltMinConfig{nrf, a.b, a.tmax, seed});
                    deviations.push_back(run.deviation);

                    if (r == 0)
                    {
                        const auto path = chains.size() == 1 ? std::filesystem::path(a.out)
                                                             : suffixed(a.out, "nrf" + std::to_string(nrf));
                        write_json_file(path, to_json(run.codeword));
                    }

                    bool monotone = true;
                    for (std::size_t t = 1; t < run.residual_trace.size(); ++t)
                        monotone = monotone && run.residual_trace[t] <= run.residual_trace[t - 1] + 1e-12;

                    rep << "run nrf=" << nrf << " repeat=" << r << " seed=" << seed
                        << " outer_iterations=" << run.outer_iterations << " converged=" << (run.converged ? 1 : 0)
                        << " rank_warning=" << (run.rank_warning ? 1 : 0) << " monotone=" << (monotone ? 1 : 0)
                        << " E=" << num(run.deviation) << '\n';
                    for (std::size_t t = 0; t < run.residual_trace.size(); ++t)
                        rep << "  residual t=" << t + 1 << ' ' << num(run.residual_trace[t]) << '\n';
                }
                medians.push_back(median(deviations));
                rep << "summary nrf=" << nrf << " median_E=" << num(medians.back()) << '\n';
            }
            if (chains.size() > 1)
            {
                bool nonincreasing = true;
                for (std::size_t i = 1; i < chains.size(); ++i)
                    if (chains[i] > chains[i - 1] && medians[i] > medians[i - 1])
                        nonincreasing = false;
                rep << "median_E_nonincreasing=" << (nonincreasing ? "yes" : "no") << '\n';
            }

            out << rep.str();
            if (!a.report.empty())
                write_text_file(a.report, rep.str());
        }

        struct BuildCodebookArgs
        {
            int n = 32;
            int m = 2;
            std::string method = "ps-icd";
            int k = 128;
            long rmax = 2000;
            int nrf = 0;
            int b = 6;
            int tmax = 50;
            std::string out = "codebook.json";
            std::uint64_t seed = 0;
        };

        void cmd_build_codebook(const BuildCodebookArgs &a, std::ostream &out)
        {
            const IdealDesign design{ideal_method_from_string(a.method), a.k, a.rmax, a.seed};
            std::optional<HardwareDesign> hw;
            if (a.nrf > 0)
                hw = HardwareDesign{a.nrf, a.b, a.tmax};
            else if (a.nrf < 0)
                throw std::invalid_argument("--nrf must be non-negative (0 keeps ideal codewords only).");
            const HierarchicalCodebook book = build_codebook(a.n, a.m, design, hw);
            write_json_file(a.out, to_json(book));

            long entries = 0;
            for (int s = 1; s <= book.layer_count(); ++s)
                entries += static_cast<long>(book.layer(s).size());
            out << "n=" << book.antennas() << " m=" << book.factor() << " layers=" << book.layer_count()
                << " entries=" << entries << " practical=" << (book.has_practical() ? 1 : 0) << '\n';
        }

        struct SimulateArgs
        {
            std::string tx;
            std::string rx;
            std::string snr = "-10:10:5";
            int trials = 500;
            int paths = 1;
            bool practical = false;
            std::string angles = "continuous";
            std::string out = "success.csv";
            std::string json_out;
            bool record_trials = false;
            std::uint64_t seed = 0;
        };

        void cmd_simulate(const SimulateArgs &a, std::ostream &out)
        {
            TrainingConfig cfg;
            cfg.trials = a.trials;
            cfg.seed = a.seed;
            cfg.paths = a.paths;
            cfg.use_practical = a.practical;
            if (a.angles == "continuous")
                cfg.angles = AngleMode::continuous;
            else if (a.angles == "on-grid")
                cfg.angles = AngleMode::on_grid;
            else
                throw std::invalid_argument("--angles must be 'continuous' or 'on-grid'.");
            cfg.tx_codebook = load_codebook(a.tx);
            cfg.rx_codebook = a.rx.empty() ? cfg.tx_codebook : load_codebook(a.rx);

            std::vector<CampaignPoint> points;
            for (const double snr : parse_real_list(a.snr))
            {
                cfg.snr_db = snr;
                points.push_back(CampaignPoint{snr, success_rate(cfg, a.record_trials)});
            }
            const std::string csv = campaign_to_csv(points);
            write_text_file(a.out, csv);
            if (!a.json_out.empty())
                write_json_file(a.json_out, campaign_to_json(points, a.record_trials));
            out << csv;
        }

        struct PatternArgs
        {
            std::string in;
            std::size_t points = 2048;
            std::string out = "pattern.csv";
        };

        void cmd_pattern(const PatternArgs &a, std::ostream &out)
        {
            const Codeword v = load_codeword(a.in);
            const auto samples = sample_pattern(v, uniform_grid(a.points));
            write_text_file(a.out, pattern_to_csv(samples));
            const auto peak = std::max_element(samples.begin(), samples.end(),
                                               [](const auto &x, const auto &y) { return x.magnitude < y.magnitude; });
            if (peak != samples.end())
                out << "points=" << samples.size() << " peak_omega=" << num(peak->omega)
                    << " peak_magnitude=" << num(peak->magnitude) << '\n';
        }

        struct Table1Args
        {
            std::string sizes = "16,32,64,128";
            std::string cover = "-1:0";
            int k = 128;
            long rmax = 2000;
            std::size_t mse_grid = kDefaultMseGrid;
            std::string out = "table1.csv";
            std::uint64_t seed = 0;
        };

        void cmd_table1(const Table1Args &a, std::ostream &out)
        {
            const TargetPattern target = TargetPattern::rect(parse_interval(a.cover));
            std::string csv = "n,ps_icd_mse,ls_icd_mse\n";
            for (const int n : parse_int_list(a.sizes))
            {
                const double ps = main_lobe_mse(ps_icd(target, n, PsIcdConfig{a.k, a.rmax, a.seed}), target, a.mse_grid);
                const double ls = main_lobe_mse(ls_icd(target, n, a.k), target, a.mse_grid);
                csv += std::to_string(n) + ',' + num(ps) + ',' + num(ls) + '\n';
            }
            write_text_file(a.out, csv);
            out << csv;
        }

        // CLI11 reads "-1:0" or "-10,-5" after an option as another flag; glue such values on.
        std::vector<std::string> glue_negative_values(const std::vector<std::string> &args)
        {
            static const std::vector<std::string> kValued = {"--cover", "--snr", "--sizes"};
            std::vector<std::string> out;
            for (std::size_t i = 0; i < args.size(); ++i)
            {
                const bool valued = std::find(kValued.begin(), kValued.end(), args[i]) != kValued.end();
                if (valued && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
                    args[i + 1][1] != '-')
                {
                    out.push_back(args[i] + "=" + args[i + 1]);
                    ++i;
                }
                else
                    out.push_back(args[i]);
            }
            return out;
        }

    } // namespace

    int run(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err)
    {
        std::uint64_t default_seed = 0;
        try
        {
            default_seed = env_seed();
        }
        catch (const std::invalid_argument &e)
        {
            err << "error: " << e.what() << '\n';
            return usage_error;
        }

        CLI::App app{"Codeword synthesis, hierarchical codebooks and beam-training simulation.", "beamcode"};
        app.set_config("--config", "", "Read options from a TOML/INI file; command-line flags take precedence");
        bool dump_config = false;
        app.add_flag("--dump-config", dump_config, "Print the effective configuration and exit")->configurable(false);
        app.require_subcommand(1);
        app.fallthrough();

        DesignIdealArgs di;
        di.seed = default_seed;
        auto *sub_di = app.add_subcommand("design-ideal", "Design an ideal codeword for a target pattern");
        sub_di->add_option("--method", di.method, "ps-icd or ls-icd")->capture_default_str();
        sub_di->add_option("--n", di.n, "Antenna count")->capture_default_str();
        sub_di->add_option("--target", di.target, "rect, triangular, step or custom")->capture_default_str();
        sub_di->add_option("--cover", di.cover, "Coverage interval lo:hi")->capture_default_str();
        sub_di->add_option("--k", di.k, "Steering grid size K")->capture_default_str();
        sub_di->add_option("--rmax", di.rmax, "Phase-update count")->capture_default_str();
        sub_di->add_option("--step-heights", di.step_heights, "Step plateaus h1,h2")->capture_default_str();
        sub_di->add_option("--step-split", di.step_split, "Fraction of coverage at h1")->capture_default_str();
        sub_di->add_option("--samples", di.samples, "CSV omega,value for --target custom");
        sub_di->add_option("--mse-grid", di.mse_grid, "Interior points for the MSE")->capture_default_str();
        sub_di->add_option("--points", di.points, "Pattern CSV points")->capture_default_str();
        sub_di->add_option("--out", di.out, "Codeword JSON path")->capture_default_str();
        sub_di->add_option("--pattern", di.pattern, "Pattern CSV path")->capture_default_str();
        add_seed(sub_di, di.seed);

        DesignPracticalArgs dp;
        dp.seed = default_seed;
        auto *sub_dp = app.add_subcommand("design-practical", "Factor a codeword through quantized phase shifters");
        sub_dp->add_option("--in", dp.in, "Ideal codeword JSON")->required();
        sub_dp->add_option("--nrf", dp.nrf, "RF chain count, or a comma list to sweep")->capture_default_str();
        sub_dp->add_option("--b", dp.b, "Phase-shifter bits")->capture_default_str();
        sub_dp->add_option("--tmax", dp.tmax, "Outer iteration cap")->capture_default_str();
        sub_dp->add_option("--repeats", dp.repeats, "Random initializations per RF count")->capture_default_str();
        sub_dp->add_option("--out", dp.out, "Hybrid codeword JSON path")->capture_default_str();
        sub_dp->add_option("--report", dp.report, "Also write the report to this file");
        add_seed(sub_dp, dp.seed);

        BuildCodebookArgs bc;
        bc.seed = default_seed;
        auto *sub_bc = app.add_subcommand("build-codebook", "Build a hierarchical codebook");
        sub_bc->add_option("--n", bc.n, "Antenna count")->capture_default_str();
        sub_bc->add_option("--m", bc.m, "Hierarchical factor")->capture_default_str();
        sub_bc->add_option("--method", bc.method, "ps-icd or ls-icd")->capture_default_str();
        sub_bc->add_option("--k", bc.k, "Steering grid size K")->capture_default_str();
        sub_bc->add_option("--rmax", bc.rmax, "Phase-update count")->capture_default_str();
        sub_bc->add_option("--nrf", bc.nrf, "RF chains; 0 keeps ideal codewords only")->capture_default_str();
        sub_bc->add_option("--b", bc.b, "Phase-shifter bits")->capture_default_str();
        sub_bc->add_option("--tmax", bc.tmax, "Outer iteration cap")->capture_default_str();
        sub_bc->add_option("--out", bc.out, "Codebook JSON path")->capture_default_str();
        add_seed(sub_bc, bc.seed);

        SimulateArgs sm;
        sm.seed = default_seed;
        auto *sub_sm = app.add_subcommand("simulate", "Monte-Carlo beam-training success rate");
        sub_sm->add_option("--tx", sm.tx, "Transmit codebook JSON")->required();
        sub_sm->add_option("--rx", sm.rx, "Receive codebook JSON (default: same as --tx)");
        sub_sm->add_option("--snr", sm.snr, "SNR list a,b,c or range lo:hi:step, in dB; inf allowed")->capture_default_str();
        sub_sm->add_option("--trials", sm.trials, "Trials per SNR point")->capture_default_str();
        sub_sm->add_option("--paths", sm.paths, "Channel paths L")->capture_default_str();
        sub_sm->add_flag("--practical", sm.practical, "Train with the practical codewords");
        sub_sm->add_option("--angles", sm.angles, "continuous or on-grid")->capture_default_str();
        sub_sm->add_option("--out", sm.out, "Success-rate CSV path")->capture_default_str();
        sub_sm->add_option("--json", sm.json_out, "Also write the campaign as JSON");
        sub_sm->add_flag("--record-trials", sm.record_trials, "Include per-trial records in the JSON");
        add_seed(sub_sm, sm.seed);

        PatternArgs pt;
        auto *sub_pt = app.add_subcommand("pattern", "Sample the beam pattern of a codeword file");
        sub_pt->add_option("--in", pt.in, "Codeword or hybrid codeword JSON")->required();
        sub_pt->add_option("--points", pt.points, "Grid points over [-1, 1]")->capture_default_str();
        sub_pt->add_option("--out", pt.out, "Pattern CSV path")->capture_default_str();

        Table1Args t1;
        t1.seed = default_seed;
        auto *sub_t1 = app.add_subcommand("table1", "Main-lobe MSE of PS-ICD and LS-ICD over array sizes");
        sub_t1->add_option("--sizes", t1.sizes, "Comma list of antenna counts")->capture_default_str();
        sub_t1->add_option("--cover", t1.cover, "Coverage interval lo:hi")->capture_default_str();
        sub_t1->add_option("--k", t1.k, "Steering grid size K")->capture_default_str();
        sub_t1->add_option("--rmax", t1.rmax, "Phase-update count")->capture_default_str();
        sub_t1->add_option("--mse-grid", t1.mse_grid, "Interior points for the MSE")->capture_default_str();
        sub_t1->add_option("--out", t1.out, "CSV path")->capture_default_str();
        add_seed(sub_t1, t1.seed);

        std::vector<std::string> args = glue_negative_values(raw_args);
        std::reverse(args.begin(), args.end()); // CLI11 consumes the vector from the back
        try
        {
            app.parse(args);
        }
        catch (const CLI::FileError &e)
        {
            err << "error: " << e.what() << '\n';
            return io_error;
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? success : usage_error;
        }

        if (dump_config)
        {
            // Only the selected command's section, so the dump loads back through --config.
            for (const auto *sub : app.get_subcommands())
                out << '[' << sub->get_name() << "]\n" << sub->config_to_str(true, false);
            return success;
        }

        std::ostringstream buf;
        buf.imbue(std::locale::classic());
        try
        {
            if (*sub_di)
                cmd_design_ideal(di, buf);
            else if (*sub_dp)
                cmd_design_practical(dp, buf);
            else if (*sub_bc)
                cmd_build_codebook(bc, buf);
            else if (*sub_sm)
                cmd_simulate(sm, buf);
            else if (*sub_pt)
                cmd_pattern(pt, buf);
            else if (*sub_t1)
                cmd_table1(t1, buf);
            out << buf.str();
        }
        catch (const IoError &e)
        {
            err << "I/O error: " << e.what() << '\n';
            return io_error;
        }
        catch (const NumericalError &e)
        {
            err << "numerical error: " << e.what() << '\n';
            return numerical_error;
        }
        catch (const std::invalid_argument &e)
        {
            err << "error: " << e.what() << '\n';
            return usage_error;
        }
        catch (const std::out_of_range &e)
        {
            err << "error: " << e.what() << '\n';
            return usage_error;
        }
        return success;
    }

    int run(int argc, char **argv)
    {
        std::vector<std::string> args;
        for (int i = 1; i < argc; ++i)
            args.emplace_back(argv[i]);
        return run(args, std::cout, std::cerr);
    }

} // namespace beamcode::cli
