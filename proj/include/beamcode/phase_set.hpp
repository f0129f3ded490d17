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

#ifndef BEAMCODE_PHASE_SET_HPP
#define BEAMCODE_PHASE_SET_HPP

#include <cstddef>
#include <vector>

namespace beamcode
{
    // Wraps an angle into [-pi, pi).
    double wrap_phase(double theta);

    /// The 2^b phases a b-bit shifter can realize:
    /// pi * (-1 + (2m - 1) / 2^b), m = 1..2^b, sorted ascending.
    class PhaseSet
    {
    public:
        static constexpr int kMaxBits = 16;

        explicit PhaseSet(int bits);

        int bits() const { return bits_; }
        std::size_t size() const { return values_.size(); }
        double spacing() const;
        double operator[](std::size_t index) const { return values_[index]; }
        const std::vector<double> &values() const { return values_; }

        // Index of the member closest to theta in circular distance. An exact
        // tie resolves to the smaller phase value.
        std::size_t nearest_index(double theta) const;
        double quantize(double theta) const { return values_[nearest_index(theta)]; }

    private:
        int bits_;
        std::vector<double> values_;
    };

    inline PhaseSet phase_set(int bits) { return PhaseSet(bits); }

} // namespace beamcode

#endif
