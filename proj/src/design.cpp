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

#include "losmimo/design.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "losmimo/spectrum.hpp"

namespace losmimo
{

double optimal_spacing(const LinkConfig& link, int m_dim)
{
    if (m_dim < 1)
        throw std::domain_error("optimal_spacing: dimension count must be at least 1");
    return std::sqrt(link.wavelength * link.distance / static_cast<double>(m_dim));
}

PolarizationEigen polarization_eigenvalues(double kappa)
{
    if (!std::isfinite(kappa) || kappa < 0.0 || kappa > 0.5)
        throw std::domain_error("polarization_eigenvalues: kappa must lie in [0, 1/2]");
    const double spread = 2.0 * std::sqrt((1.0 - kappa) * kappa);
    return PolarizationEigen{1.0 + spread, 1.0 - spread};
}

namespace
{

void validate_two_level_inputs(const PolarizationEigen& mu, double beta, int m,
                               double total_power, double noise_variance)
{
    if (!(mu.mu1 >= 1.0) || !(mu.mu2 >= 0.0) || mu.mu2 > mu.mu1)
        throw std::domain_error("two-level spectrum: invalid polarization eigenvalues");
    if (!std::isfinite(beta) || beta <= 0.0)
        throw std::domain_error("two-level spectrum: channel gain must be positive");
    if (m < 1)
        throw std::domain_error("two-level spectrum: antenna count must be at least 1");
    if (!std::isfinite(total_power) || total_power < 0.0)
        throw std::domain_error("two-level spectrum: total power must be nonnegative");
    if (!std::isfinite(noise_variance) || noise_variance <= 0.0)
        throw std::domain_error("two-level spectrum: noise variance must be positive");
}

} // namespace

TwoLevelAllocation two_level_allocation(const PolarizationEigen& mu, double beta, int m,
                                        double total_power, double noise_variance)
{
    validate_two_level_inputs(mu, beta, m, total_power, noise_variance);

    TwoLevelAllocation alloc{};
    alloc.threshold_power =
        (mu.mu2 > 0.0)
            ? noise_variance / (mu.mu2 * beta) - noise_variance / (mu.mu1 * beta)
            : std::numeric_limits<double>::infinity();

    const double md = static_cast<double>(m);
    if (total_power <= alloc.threshold_power)
    {
        alloc.q1 = total_power / md;
        alloc.q2 = 0.0;
    }
    else
    {
        const double half = total_power / (2.0 * md);
        const double lift = noise_variance / (2.0 * mu.mu2 * beta * md) -
                            noise_variance / (2.0 * mu.mu1 * beta * md);
        alloc.q1 = half + lift;
        alloc.q2 = half - lift;
    }
    return alloc;
}

double high_snr_capacity(const PolarizationEigen& mu, double beta, int m,
                         double total_power, double noise_variance)
{
    validate_two_level_inputs(mu, beta, m, total_power, noise_variance);
    if (mu.mu2 <= 0.0)
        throw std::domain_error(
            "high_snr_capacity: undefined for a rank-collapsed polarization (mu2 = 0)");
    const double threshold =
        noise_variance / (mu.mu2 * beta) - noise_variance / (mu.mu1 * beta);
    if (total_power <= threshold)
        throw std::domain_error(
            "high_snr_capacity: only valid above the two-level power threshold");

    const double md = static_cast<double>(m);
    const double strong = 1.0 + total_power * mu.mu1 * beta / (2.0 * noise_variance) +
                          (mu.mu1 - mu.mu2) / (2.0 * mu.mu2);
    const double weak = 1.0 + total_power * mu.mu2 * beta / (2.0 * noise_variance) +
                        (mu.mu2 - mu.mu1) / (2.0 * mu.mu1);
    return md * std::log2(strong) + md * std::log2(weak);
}

double two_level_capacity(const PolarizationEigen& mu, double beta, int m,
                          double total_power, double noise_variance)
{
    validate_two_level_inputs(mu, beta, m, total_power, noise_variance);
    const double threshold =
        (mu.mu2 > 0.0)
            ? noise_variance / (mu.mu2 * beta) - noise_variance / (mu.mu1 * beta)
            : std::numeric_limits<double>::infinity();
    if (mu.mu2 > 0.0 && total_power > threshold)
        return high_snr_capacity(mu, beta, m, total_power, noise_variance);

    const double level = beta * static_cast<double>(m);
    Spectrum s;
    s.eigenvalues.assign(static_cast<std::size_t>(m), mu.mu1 * level);
    s.eigenvalues.insert(s.eigenvalues.end(), static_cast<std::size_t>(m), mu.mu2 * level);
    for (double v : s.eigenvalues)
        s.trace += v;
    return waterfill(s, total_power, noise_variance).capacity;
}

GeometryChoice optimize_factorization(int total, const LinkConfig& link, double width,
                                      GeometryObjective objective)
{
    if (total < 1)
        throw std::domain_error("optimize_factorization: total count must be at least 1");
    if (!std::isfinite(width) || width <= 0.0)
        throw std::domain_error("optimize_factorization: element width must be positive");

    struct Candidate
    {
        int m_h;
        int m_v;
        UraGeometry geometry;
        ApertureDims dims;
        double value;
    };

    std::vector<Candidate> candidates;
    for (int div = 1; div <= total; ++div)
    {
        if (total % div != 0)
            continue;
        const int m_h = div;
        const int m_v = total / div;
        UraGeometry g(m_h, m_v, optimal_spacing(link, m_h), optimal_spacing(link, m_v),
                      width);
        const ApertureDims dims = aperture_dimensions(g);
        const double value =
            (objective == GeometryObjective::Area) ? dims.area : dims.aperture_length;
        candidates.push_back(Candidate{m_h, m_v, g, dims, value});
    }

    double best = candidates.front().value;
    for (const auto& c : candidates)
        best = std::min(best, c.value);

    // symmetric factorizations give exactly equal objective values, so an
    // exact comparison identifies the tied set
    const Candidate* chosen = nullptr;
    int tied = 0;
    for (const auto& c : candidates)
    {
        if (c.value != best)
            continue;
        ++tied;
        if (chosen == nullptr)
        {
            chosen = &c;
            continue;
        }
        // area ties between ULA orientations resolve to the horizontal
        // ULA; everything else keeps the smaller m_h
        if (objective == GeometryObjective::Area && c.m_h > chosen->m_h)
            chosen = &c;
    }

    GeometryChoice choice;
    choice.m_h = chosen->m_h;
    choice.m_v = chosen->m_v;
    choice.delta_h = chosen->geometry.delta_h;
    choice.delta_v = chosen->geometry.delta_v;
    choice.l_h = chosen->dims.l_h;
    choice.l_v = chosen->dims.l_v;
    choice.area = chosen->dims.area;
    choice.aperture_length = chosen->dims.aperture_length;
    choice.tie = tied > 1;
    choice.continuous_optimum_attained =
        (objective == GeometryObjective::Area) ? true : (chosen->m_h == chosen->m_v);
    return choice;
}

double area_derivative(int total, const LinkConfig& link, double width, double m_h)
{
    if (total < 1)
        throw std::domain_error("area_derivative: total count must be at least 1");
    if (!(m_h >= 1.0) || m_h > static_cast<double>(total))
        throw std::domain_error("area_derivative: m_h must lie in [1, total]");

    const double ld = link.wavelength * link.distance;
    const double m = static_cast<double>(total);
    const double root_m = std::sqrt(m);
    const double numerator =
        width * std::sqrt(ld * m_h) * (1.0 + m_h - root_m - m_h / root_m) +
        2.0 * (ld / m) * (m - m_h * m_h);
    return numerator / (2.0 * m_h * m_h);
}

} // namespace losmimo
