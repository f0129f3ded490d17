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

#ifndef BEAMCODE_CLI_HPP
#define BEAMCODE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace beamcode::cli
{
    enum ExitCode : int
    {
        success = 0,
        usage_error = 2,
        io_error = 3,
        numerical_error = 4
    };

    // `args` excludes the program name.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
    int run(int argc, char **argv);

} // namespace beamcode::cli

#endif
