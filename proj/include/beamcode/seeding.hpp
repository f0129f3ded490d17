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

#ifndef BEAMCODE_SEEDING_HPP
#define BEAMCODE_SEEDING_HPP

#include <cstdint>
#include <random>

namespace beamcode
{
    using Rng = std::mt19937_64;

    // Independent sub-stream seed for (master, a, b), via std::seed_seq.
    std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

    // Uniform in [lo, hi) built from the raw 53 high bits of one draw.
    double uniform_real(Rng &rng, double lo, double hi);

} // namespace beamcode

#endif
