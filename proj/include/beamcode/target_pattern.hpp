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

#ifndef BEAMCODE_TARGET_PATTERN_HPP
#define BEAMCODE_TARGET_PATTERN_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "beamcode/array_core.hpp"

namespace beamcode
{
    enum class TargetKind
    {
        rect,
        triangular,
        step,
        custom
    };

    std::string_view to_string(TargetKind kind);
    TargetKind target_kind_from_string(std::string_view name);

    struct StepParams
    {
        double first_height = 1.0;
        double second_height = 2.0;
        double split = 0.5; // fraction of the coverage covered by the first plateau
    };

    struct CustomSample
    {
        double omega;
        double value;
    };

    /// Desired beam-gain magnitude g(omega) over the cosine domain.
    ///
    /// Every shape is scaled so that its integral of g^2 over [-1, 1] equals 2,
    /// the energy of any unit-norm codeword's pattern. A rect of width B thus
    /// sits at C_v = sqrt(2/B).
    ///
    /// The triangular and step shapes are parametric reconstructions: the
    /// triangle rises linearly from zero at the lower edge to its peak at the
    /// midpoint and falls back to zero; the step is two plateaus meeting at
    /// lo + split*B. Custom targets interpolate linearly between samples and
    /// vanish outside the sampled range.
    class TargetPattern
    {
    public:
        static TargetPattern rect(Interval coverage);
        static TargetPattern triangular(Interval coverage);
        static TargetPattern step(Interval coverage, StepParams params);
        static TargetPattern custom(std::vector<CustomSample> samples);

        TargetKind kind() const { return kind_; }
        const Interval &coverage() const { return coverage_; }
        const StepParams &step_params() const { return step_; }
        const std::vector<CustomSample> &samples() const { return samples_; }

        // Amplitude factor applied to the unit-height shape (C_v for rect).
        double amplitude() const { return scale_; }

        double operator()(double omega) const;

    private:
        TargetPattern(TargetKind kind, Interval coverage, double scale);

        double unit_shape(double omega) const;

        TargetKind kind_;
        Interval coverage_;
        double scale_;
        StepParams step_{};
        std::vector<CustomSample> samples_;
    };

} // namespace beamcode

#endif
