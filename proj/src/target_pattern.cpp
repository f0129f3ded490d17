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

#include "beamcode/target_pattern.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beamcode
{
    std::string_view to_string(TargetKind kind)
    {
        switch (kind)
        {
        case TargetKind::rect:
            return "rect";
        case TargetKind::triangular:
            return "triangular";
        case TargetKind::step:
            return "step";
        case TargetKind::custom:
            return "custom";
        }
        return "unknown";
    }

    TargetKind target_kind_from_string(std::string_view name)
    {
        if (name == "rect")
            return TargetKind::rect;
        if (name == "triangular")
            return TargetKind::triangular;
        if (name == "step")
            return TargetKind::step;
        if (name == "custom")
            return TargetKind::custom;
        throw std::invalid_argument("Unknown target kind '" + std::string(name) + "'.");
    }

    TargetPattern::TargetPattern(TargetKind kind, Interval coverage, double scale)
        : kind_(kind), coverage_(coverage), scale_(scale)
    {
    }

    // Energy of the unit-height shape is B, B/3 and B*(f*h1^2 + (1-f)*h2^2);
    // the scale makes the total 2.
    TargetPattern TargetPattern::rect(Interval coverage)
    {
        validate_interval(coverage);
        return TargetPattern(TargetKind::rect, coverage, std::sqrt(2.0 / coverage.width()));
    }

    TargetPattern TargetPattern::triangular(Interval coverage)
    {
        validate_interval(coverage);
        return TargetPattern(TargetKind::triangular, coverage, std::sqrt(6.0 / coverage.width()));
    }

    TargetPattern TargetPattern::step(Interval coverage, StepParams params)
    {
        validate_interval(coverage);
        if (params.first_height < 0.0 || params.second_height < 0.0)
            throw std::invalid_argument("Step heights must be non-negative.");
        if (!(params.split > 0.0 && params.split < 1.0))
            throw std::invalid_argument("Step split fraction must lie in (0, 1).");
        const double energy = coverage.width() * (params.split * params.first_height * params.first_height +
                                                  (1.0 - params.split) * params.second_height * params.second_height);
        if (!(energy > 0.0))
            throw std::invalid_argument("Step heights cannot both be zero.");
        TargetPattern t(TargetKind::step, coverage, std::sqrt(2.0 / energy));
        t.step_ = params;
        return t;
    }

    TargetPattern TargetPattern::custom(std::vector<CustomSample> samples)
    {
        if (samples.size() < 2)
            throw std::invalid_argument("Custom target needs at least two samples.");
        double energy = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i)
        {
            const auto &s = samples[i];
            if (s.omega < -1.0 || s.omega > 1.0)
                throw std::invalid_argument("Custom sample angle outside [-1, 1].");
            if (!(s.value >= 0.0))
                throw std::invalid_argument("Custom sample values must be non-negative.");
            if (i > 0)
            {
                const auto &p = samples[i - 1];
                if (!(s.omega > p.omega))
                    throw std::invalid_argument("Custom sample angles must be strictly increasing.");
                // exact integral of a linear segment squared
                energy += (s.omega - p.omega) * (p.value * p.value + p.value * s.value + s.value * s.value) / 3.0;
            }
        }
        if (!(energy > 0.0))
            throw std::invalid_argument("Custom target cannot be identically zero.");
        const Interval cov{samples.front().omega, samples.back().omega};
        TargetPattern t(TargetKind::custom, cov, std::sqrt(2.0 / energy));
        t.samples_ = std::move(samples);
        return t;
    }

    double TargetPattern::unit_shape(double omega) const
    {
        const double x = (omega - coverage_.lo) / coverage_.width();
        switch (kind_)
        {
        case TargetKind::rect:
            return 1.0;
        case TargetKind::triangular:
            return 1.0 - std::abs(2.0 * x - 1.0);
        case TargetKind::step:
            return x < step_.split ? step_.first_height : step_.second_height;
        case TargetKind::custom:
        {
            auto hi = std::lower_bound(samples_.begin(), samples_.end(), omega,
                                       [](const CustomSample &s, double w) { return s.omega < w; });
            if (hi == samples_.begin())
                return hi->value;
            if (hi == samples_.end())
                return samples_.back().value;
            auto lo = hi - 1;
            const double u = (omega - lo->omega) / (hi->omega - lo->omega);
            return lo->value + u * (hi->value - lo->value);
        }
        }
        return 0.0;
    }

    double TargetPattern::operator()(double omega) const
    {
        if (!coverage_.contains(omega))
            return 0.0;
        return scale_ * unit_shape(omega);
    }

} // namespace beamcode
