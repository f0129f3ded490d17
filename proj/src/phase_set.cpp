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

#include "beamcode/phase_set.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "beamcode/array_core.hpp"

namespace beamcode
{
    double wrap_phase(double theta)
    {
        double r = std::fmod(theta + kPi, 2.0 * kPi);
        if (r < 0.0)
            r += 2.0 * kPi;
        r -= kPi;
        return r >= kPi ? -kPi : r;
    }

    PhaseSet::PhaseSet(int bits) : bits_(bits)
    {
        if (bits < 1 || bits > kMaxBits)
            throw std::invalid_argument("Phase shifter resolution must be between 1 and " + std::to_string(kMaxBits) + " bits.");
        const std::size_t count = std::size_t{1} << bits;
        values_.resize(count);
        const double denom = static_cast<double>(count);
        for (std::size_t m = 0; m < count; ++m)
            values_[m] = kPi * (-1.0 + (2.0 * static_cast<double>(m) + 1.0) / denom);
    }

    double PhaseSet::spacing() const
    {
        return 2.0 * kPi / static_cast<double>(values_.size());
    }

    std::size_t PhaseSet::nearest_index(double theta) const
    {
        const auto n = static_cast<long>(values_.size());
        const double w = wrap_phase(theta);
        const long below = static_cast<long>(std::floor((w + kPi) / spacing() - 0.5));
        std::size_t a = static_cast<std::size_t>(((below % n) + n) % n);
        std::size_t b = static_cast<std::size_t>(((below + 1) % n + n) % n);
        if (a > b)
            std::swap(a, b);
        const double da = std::abs(wrap_phase(w - values_[a]));
        const double db = std::abs(wrap_phase(w - values_[b]));
        return db < da ? b : a;
    }

} // namespace beamcode
