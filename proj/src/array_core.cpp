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

#include "beamcode/array_core.hpp"

#include <cmath>
#include <stdexcept>

#include "beamcode/numfmt.hpp"
#include "beamcode/target_pattern.hpp"

namespace beamcode
{
    void validate_interval(const Interval &iv)
    {
        if (!(iv.lo < iv.hi))
            throw std::invalid_argument("Interval must satisfy lo < hi.");
        if (iv.lo < -1.0 || iv.hi > 1.0)
            throw std::invalid_argument("Interval must lie within [-1, 1].");
    }

    Codeword::Codeword(CVector entries) : entries_(std::move(entries))
    {
        if (entries_.size() == 0)
            throw std::invalid_argument("Codeword cannot be empty.");
        const double norm = entries_.norm();
        if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance)
            throw std::invalid_argument("Codeword must have unit norm (got " + format_number(norm, 17) + ").");
    }

    Codeword Codeword::normalized(const CVector &raw)
    {
        const double norm = raw.norm();
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw std::invalid_argument("Cannot normalize a zero or non-finite vector.");
        return Codeword(raw / norm);
    }

    CVector steering_vector(int n_antennas, double omega)
    {
        if (n_antennas < 1)
            throw std::invalid_argument("Number of antennas must be positive.");
        const double scale = 1.0 / std::sqrt(static_cast<double>(n_antennas));
        CVector a(n_antennas);
        for (int n = 0; n < n_antennas; ++n)
            a(n) = std::polar(scale, kPi * n * omega);
        return a;
    }

    cdouble beam_gain(const CVector &v, double omega)
    {
        cdouble acc{0.0, 0.0};
        for (Eigen::Index n = 0; n < v.size(); ++n)
            acc += v(n) * std::polar(1.0, -kPi * static_cast<double>(n) * omega);
        return acc;
    }

    std::vector<PatternSample> sample_pattern(const Codeword &v, std::span<const double> grid)
    {
        std::vector<PatternSample> out;
        out.reserve(grid.size());
        for (double omega : grid)
        {
            const cdouble g = beam_gain(v, omega);
            out.push_back({omega, std::abs(g), std::arg(g)});
        }
        return out;
    }

    std::vector<double> uniform_grid(std::size_t count)
    {
        std::vector<double> grid(count);
        if (count == 1)
            grid[0] = 0.0;
        for (std::size_t i = 0; count > 1 && i < count; ++i)
            grid[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(count - 1);
        return grid;
    }

    std::vector<double> interior_grid(const Interval &iv, std::size_t count)
    {
        std::vector<double> grid(count);
        const double step = iv.width() / static_cast<double>(count + 1);
        for (std::size_t i = 0; i < count; ++i)
            grid[i] = iv.lo + step * static_cast<double>(i + 1);
        return grid;
    }

    SteeringMatrix::SteeringMatrix(int n_antennas, int grid_size)
    {
        if (n_antennas < 1)
            throw std::invalid_argument("Number of antennas must be positive.");
        if (grid_size < n_antennas)
            throw std::invalid_argument("Steering grid size K must be at least the number of antennas.");

        matrix_.resize(n_antennas, grid_size);
        grid_.resize(static_cast<std::size_t>(grid_size));
        const double scale = std::sqrt(static_cast<double>(n_antennas));
        for (int k = 0; k < grid_size; ++k)
        {
            // omega_k = -1 + (2k - 1)/K with k 1-based
            const double omega = -1.0 + (2.0 * k + 1.0) / grid_size;
            grid_[static_cast<std::size_t>(k)] = omega;
            matrix_.col(k) = scale * steering_vector(n_antennas, omega);
        }
    }

    CMatrix SteeringMatrix::gram_columns() const
    {
        return matrix_.adjoint() * matrix_;
    }

    SteeringMatrix steering_matrix(int n_antennas, int grid_size)
    {
        return SteeringMatrix(n_antennas, grid_size);
    }

    double main_lobe_mse(const Codeword &v, const TargetPattern &target, std::size_t grid_density)
    {
        const Interval &iv = target.coverage();
        if (!(iv.width() > 0.0))
            throw std::invalid_argument("Target coverage is empty.");
        if (grid_density < 2)
            throw std::invalid_argument("MSE grid density must be at least 2.");

        double acc = 0.0;
        for (double omega : interior_grid(iv, grid_density))
        {
            const double err = std::abs(beam_gain(v, omega)) - target(omega);
            acc += err * err;
        }
        return acc / static_cast<double>(grid_density);
    }

    std::string pattern_to_csv(std::span<const PatternSample> samples)
    {
        std::string out = "omega,magnitude,phase_rad\n";
        for (const auto &s : samples)
        {
            out += format_number(s.omega, 12);
            out += ',';
            out += format_number(s.magnitude, 12);
            out += ',';
            out += format_number(s.phase_rad, 12);
            out += '\n';
        }
        return out;
    }

} // namespace beamcode
