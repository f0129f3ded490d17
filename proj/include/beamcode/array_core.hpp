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

#ifndef BEAMCODE_ARRAY_CORE_HPP
#define BEAMCODE_ARRAY_CORE_HPP

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace beamcode
{
    using cdouble = std::complex<double>;
    using CVector = Eigen::VectorXcd;
    using CMatrix = Eigen::MatrixXcd;

    inline constexpr double kPi = std::numbers::pi;

    // Closed angular interval in the cosine domain, lo < hi, both in [-1, 1].
    struct Interval
    {
        double lo = -1.0;
        double hi = 1.0;

        double width() const { return hi - lo; }
        double midpoint() const { return 0.5 * (lo + hi); }
        bool contains(double omega) const { return omega >= lo && omega <= hi; }
    };

    // Throws std::invalid_argument unless lo < hi and both ends lie in [-1, 1].
    void validate_interval(const Interval &iv);

    /// Unit-norm beamforming vector (one complex weight per antenna).
    ///
    /// The norm is checked at construction with tolerance 1e-9. Use
    /// `Codeword::normalized` to build one from an arbitrary nonzero vector.
    class Codeword
    {
    public:
        static constexpr double kNormTolerance = 1e-9;

        explicit Codeword(CVector entries);
        static Codeword normalized(const CVector &raw);

        const CVector &entries() const { return entries_; }
        std::size_t size() const { return static_cast<std::size_t>(entries_.size()); }
        cdouble operator[](std::size_t n) const { return entries_(static_cast<Eigen::Index>(n)); }

    private:
        CVector entries_;
    };

    // Entry n (0-based) equals exp(j*pi*n*omega) / sqrt(N).
    CVector steering_vector(int n_antennas, double omega);

    // G(v, omega) = sum_n v_n exp(-j*pi*n*omega); accepts any (unnormalized) vector.
    cdouble beam_gain(const CVector &v, double omega);
    inline cdouble beam_gain(const Codeword &v, double omega) { return beam_gain(v.entries(), omega); }

    struct PatternSample
    {
        double omega;
        double magnitude;
        double phase_rad;
    };

    std::vector<PatternSample> sample_pattern(const Codeword &v, std::span<const double> grid);

    // `count` equally spaced points spanning [-1, 1] including both ends.
    std::vector<double> uniform_grid(std::size_t count);

    /// Columns are sqrt(N) * a(N, omega_k) with omega_k = -1 + (2k - 1)/K, k = 1..K.
    ///
    /// With K >= N the rows are orthogonal: A * A^H = K * I_N.
    class SteeringMatrix
    {
    public:
        SteeringMatrix(int n_antennas, int grid_size);

        int antennas() const { return static_cast<int>(matrix_.rows()); }
        int grid_size() const { return static_cast<int>(matrix_.cols()); }
        const CMatrix &matrix() const { return matrix_; }
        const std::vector<double> &grid() const { return grid_; }

        // A^H A, the K x K Hermitian matrix the phase search works on.
        CMatrix gram_columns() const;

    private:
        CMatrix matrix_;
        std::vector<double> grid_;
    };

    SteeringMatrix steering_matrix(int n_antennas, int grid_size);

    class TargetPattern;

    // Design decision: 1000 interior points, endpoints excluded.
    inline constexpr std::size_t kDefaultMseGrid = 1000;

    /// Mean of (|G(v, omega)| - g(omega))^2 over `grid_density` equally spaced
    /// points strictly inside the target's coverage interval. For a rect target
    /// g(omega) is the constant level C_v.
    double main_lobe_mse(const Codeword &v, const TargetPattern &target,
                         std::size_t grid_density = kDefaultMseGrid);

    // Points lo + B*i/(count+1), i = 1..count.
    std::vector<double> interior_grid(const Interval &iv, std::size_t count);

    // CSV with header `omega,magnitude,phase_rad`, 12 significant digits.
    std::string pattern_to_csv(std::span<const PatternSample> samples);

} // namespace beamcode

#endif
