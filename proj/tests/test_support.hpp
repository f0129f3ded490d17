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

#ifndef BEAMCODE_TEST_SUPPORT_HPP
#define BEAMCODE_TEST_SUPPORT_HPP

#include <cmath>
#include <random>

#include "beamcode/array_core.hpp"
#include "beamcode/seeding.hpp"

namespace beamcode::test
{
    inline CVector random_vector(Rng &rng, Eigen::Index n)
    {
        std::normal_distribution<double> dist(0.0, 1.0);
        CVector v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v(i) = cdouble(dist(rng), dist(rng));
        return v;
    }

    inline Codeword random_codeword(Rng &rng, Eigen::Index n)
    {
        return Codeword::normalized(random_vector(rng, n));
    }

    inline cdouble random_complex(Rng &rng, double scale = 1.0)
    {
        std::normal_distribution<double> dist(0.0, scale);
        return {dist(rng), dist(rng)};
    }

} // namespace beamcode::test

#endif
