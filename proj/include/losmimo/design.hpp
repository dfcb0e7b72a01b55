// SPDX-License-Identifier: Apache-2.0
//
// losmimo: geometry design and capacity analysis of dual-polarized
// rectangular antenna arrays for line-of-sight MIMO links
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

#ifndef LOSMIMO_DESIGN_H
#define LOSMIMO_DESIGN_H

#include "losmimo/geometry.hpp"

namespace losmimo
{
    // Capacity-optimal spacing sqrt(lambda * d / m_dim) for a dimension
    // holding m_dim antennas. Each dimension is optimized independently.
    double optimal_spacing(const LinkConfig& link, int m_dim);

    // Eigenvalues of the squared polarization coupling: mu1 + mu2 = 2,
    // mu1 = 1 + 2*sqrt((1-kappa)*kappa), mu2 = 1 - the same.
    struct PolarizationEigen
    {
        double mu1;
        double mu2;
    };

    PolarizationEigen polarization_eigenvalues(double kappa);

    // Per-antenna powers on the strong (q1) and weak (q2) eigenvalue sets
    // of the optimally spaced dual-polarized channel. Below threshold_power
    // all power rides the strong set; above it both sets fill.
    struct TwoLevelAllocation
    {
        double q1;
        double q2;
        double threshold_power; // +inf when mu2 == 0
    };

    TwoLevelAllocation two_level_allocation(const PolarizationEigen& mu, double beta,
                                            int m, double total_power,
                                            double noise_variance);

    // Closed-form capacity valid above threshold_power (both sets active);
    // mu2 == 0 is rejected since the expression is undefined there.
    double high_snr_capacity(const PolarizationEigen& mu, double beta, int m,
                             double total_power, double noise_variance);

    // Capacity of the optimally spaced link from its two-level spectrum:
    // the closed form when it applies, general water-filling otherwise.
    double two_level_capacity(const PolarizationEigen& mu, double beta, int m,
                              double total_power, double noise_variance);

    enum class GeometryObjective
    {
        Area,
        ApertureLength
    };

    struct GeometryChoice
    {
        int m_h = 1;
        int m_v = 1;
        double delta_h = 0.0;
        double delta_v = 0.0;
        double l_h = 0.0;
        double l_v = 0.0;
        double area = 0.0;
        double aperture_length = 0.0;
        bool tie = false; // another factorization reaches the same value
        // whether the optimizer of the continuous relaxation (a ULA for
        // area, m_h = sqrt(M) for aperture length) is an integer
        // factorization of M
        bool continuous_optimum_attained = true;
    };

    // Exhaustive search over the divisor pairs m_h * m_v = total, all at
    // optimal spacings. Area ties between the two ULA orientations report
    // the horizontal ULA; other ties report the smaller m_h.
    GeometryChoice optimize_factorization(int total, const LinkConfig& link,
                                          double width, GeometryObjective objective);

    // Derivative of the array area with respect to m_h treated as a
    // continuous variable, with m_v = total / m_h and optimal spacings.
    // Vanishes at m_h = sqrt(total); test oracle, not used by the optimizer.
    double area_derivative(int total, const LinkConfig& link, double width, double m_h);

} // namespace losmimo

#endif
