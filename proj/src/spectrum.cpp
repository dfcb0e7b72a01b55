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

#include "losmimo/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "losmimo/jacobi.hpp"

namespace losmimo
{
namespace
{

Spectrum finish_spectrum(std::vector<double> raw, double frob_sq)
{
    raw = clamp_nonnegative(std::move(raw), frob_sq);
    std::sort(raw.begin(), raw.end(), std::greater<>());

    const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
    const double scale = std::max(frob_sq, 0.0);
    if (std::abs(sum - frob_sq) > 1e-9 * std::max(scale, 1e-300))
    {
        std::ostringstream msg;
        msg << "gram_spectrum: eigenvalue sum " << sum << " deviates from ||h||_F^2 "
            << frob_sq << " beyond 1e-9 relative";
        throw NumericalError(msg.str());
    }

    Spectrum s;
    s.eigenvalues = std::move(raw);
    s.trace = sum;
    return s;
}

void require_finite(const ComplexMatrix& h)
{
    if (!h.is_finite())
        throw std::domain_error("gram_spectrum: matrix has non-finite entries");
}

} // namespace

Spectrum gram_spectrum(const ComplexMatrix& h)
{
    require_finite(h);
    return finish_spectrum(hermitian_eigenvalues(gram(h)), h.frobenius_norm_sq());
}

Spectrum gram_spectrum_serial(const ComplexMatrix& h)
{
    require_finite(h);
    return finish_spectrum(hermitian_eigenvalues_serial(gram_serial(h)),
                           h.frobenius_norm_sq());
}

std::vector<double> clamp_nonnegative(std::vector<double> values, double trace)
{
    const double floor = -1e-9 * std::max(trace, 0.0);
    for (double& v : values)
    {
        if (v < floor)
        {
            std::ostringstream msg;
            msg << "gram_spectrum: eigenvalue " << v << " below round-off floor " << floor
                << " (trace " << trace << "); treating as solver failure";
            throw NumericalError(msg.str());
        }
        if (v < 0.0)
            v = 0.0;
    }
    return values;
}

CapacityResult waterfill(const Spectrum& spectrum, double total_power,
                         double noise_variance)
{
    if (!std::isfinite(total_power) || total_power < 0.0)
        throw std::domain_error("waterfill: total power must be nonnegative");
    if (!std::isfinite(noise_variance) || noise_variance <= 0.0)
        throw std::domain_error("waterfill: noise variance must be positive");

    const auto& g = spectrum.eigenvalues;
    const std::size_t n = g.size();
    for (double v : g)
        if (!std::isfinite(v) || v < 0.0)
            throw std::domain_error("waterfill: eigenvalues must be finite and nonnegative");

    // positive eigenvalues, strongest first; zero modes never carry power
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (g[i] > 0.0)
            order.push_back(i);
    if (order.empty())
        throw std::domain_error("waterfill: all eigenvalues are zero (zero-capacity channel)");
    std::sort(order.begin(), order.end(),
              [&g](std::size_t a, std::size_t b) { return g[a] > g[b]; });

    CapacityResult result;
    result.allocations.assign(n, 0.0);

    if (total_power == 0.0)
    {
        result.water_level = noise_variance / g[order.front()];
        return result;
    }

    // largest active set whose closed-form water level clears its weakest
    // inverse gain
    const std::size_t count = order.size();
    std::vector<double> inv_prefix(count + 1, 0.0);
    for (std::size_t i = 0; i < count; ++i)
        inv_prefix[i + 1] = inv_prefix[i] + noise_variance / g[order[i]];

    std::size_t active = 1;
    double level = total_power + inv_prefix[1];
    for (std::size_t k = count; k >= 1; --k)
    {
        const double candidate = (total_power + inv_prefix[k]) / static_cast<double>(k);
        if (candidate > noise_variance / g[order[k - 1]])
        {
            active = k;
            level = candidate;
            break;
        }
    }

    double capacity = 0.0;
    for (std::size_t i = 0; i < active; ++i)
    {
        const double gain = g[order[i]];
        const double q = level - noise_variance / gain;
        result.allocations[order[i]] = q;
        capacity += std::log2(1.0 + q * gain / noise_variance);
    }

    result.capacity = capacity;
    result.water_level = level;
    result.active_count = static_cast<int>(active);
    return result;
}

namespace
{

CapacityResult capacity_from_matrix(const LinkConfig& link, const ComplexMatrix& h)
{
    const Spectrum s = gram_spectrum(h);
    const double power = std::pow(10.0, link.snr_db / 10.0) / link.reference_gain();
    return waterfill(s, power, 1.0);
}

} // namespace

CapacityResult capacity_of_link(const LinkConfig& link, const UraGeometry& g,
                                ChannelModelKind kind)
{
    return capacity_from_matrix(link, build_dual(link, g, kind));
}

CapacityResult capacity_of_link_single_pol(const LinkConfig& link, const UraGeometry& g,
                                           ChannelModelKind kind)
{
    return capacity_from_matrix(link, build_unpolarized(link, g, kind));
}

} // namespace losmimo
