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

#include "losmimo/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace losmimo
{

double channel_gain(const LinkConfig& link, double dist)
{
    if (!std::isfinite(dist) || dist <= 0.0)
        throw std::domain_error("channel_gain: distance must be positive");
    const double ratio = link.wavelength / (4.0 * M_PI * dist);
    return ratio * ratio;
}

ComplexMatrix build_unpolarized(const LinkConfig& link, const UraGeometry& g,
                                ChannelModelKind kind)
{
    const int m_total = g.total();
    const double d = link.distance;
    const double lambda = link.wavelength;
    const double sqrt_beta = std::sqrt(link.reference_gain());

    std::vector<int> col(static_cast<std::size_t>(m_total));
    std::vector<int> row(static_cast<std::size_t>(m_total));
    for (int m = 1; m <= m_total; ++m)
    {
        col[static_cast<std::size_t>(m - 1)] = g.horizontal_index(m);
        row[static_cast<std::size_t>(m - 1)] = g.vertical_index(m);
    }

    ComplexMatrix h(m_total, m_total);

#pragma omp parallel for schedule(static)
    for (int k = 0; k < m_total; ++k)
    {
        for (int m = 0; m < m_total; ++m)
        {
            const double di = static_cast<double>(col[static_cast<std::size_t>(m)] -
                                                  col[static_cast<std::size_t>(k)]);
            const double dj = static_cast<double>(row[static_cast<std::size_t>(m)] -
                                                  row[static_cast<std::size_t>(k)]);
            // squared transverse offset, kept in expanded form so nearby
            // distances never get subtracted
            const double offset_sq = di * di * g.delta_h * g.delta_h +
                                     dj * dj * g.delta_v * g.delta_v;
            if (kind == ChannelModelKind::Exact)
            {
                const double dist = std::sqrt(d * d + offset_sq);
                const double amp = std::sqrt(channel_gain(link, dist));
                const double phase = -2.0 * M_PI * (dist - d) / lambda;
                h(k, m) = std::polar(amp, phase);
            }
            else
            {
                const double phase = -M_PI * offset_sq / (d * lambda);
                h(k, m) = std::polar(sqrt_beta, phase);
            }
        }
    }
    return h;
}

ComplexMatrix polarization_matrix(double kappa)
{
    if (!std::isfinite(kappa) || kappa < 0.0 || kappa > 0.5)
        throw std::domain_error("polarization_matrix: kappa must lie in [0, 1/2]");
    ComplexMatrix k(2, 2);
    const double co = std::sqrt(1.0 - kappa);
    const double cross = std::sqrt(kappa);
    k(0, 0) = co;
    k(0, 1) = cross;
    k(1, 0) = cross;
    k(1, 1) = co;
    return k;
}

ComplexMatrix build_dual(const LinkConfig& link, const UraGeometry& g,
                         ChannelModelKind kind)
{
    return kronecker(polarization_matrix(link.kappa), build_unpolarized(link, g, kind));
}

} // namespace losmimo
