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

#ifndef BEAMCODE_ERRORS_HPP
#define BEAMCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace beamcode
{
    // A design routine produced a degenerate (zero or non-finite) result.
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

} // namespace beamcode

#endif
