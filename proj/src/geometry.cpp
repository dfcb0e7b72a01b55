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

#include "losmimo/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace losmimo
{

UraGeometry::UraGeometry(int m_h_, int m_v_, double delta_h_, double delta_v_, double width_)
    : m_h(m_h_), m_v(m_v_), delta_h(delta_h_), delta_v(delta_v_), width(width_)
{
    if (m_h < 1 || m_v < 1)
        throw std::domain_error("UraGeometry: antenna counts must be at least 1");
    if (!std::isfinite(delta_h) || !std::isfinite(delta_v) || delta_h < 0.0 || delta_v < 0.0)
        throw std::domain_error("UraGeometry: spacings must be finite and nonnegative");
    if (!std::isfinite(width) || width <= 0.0)
        throw std::domain_error("UraGeometry: element width must be positive");
}

int UraGeometry::horizontal_index(int m) const
{
    if (m < 1 || m > total())
        throw std::out_of_range("horizontal_index: location " + std::to_string(m) +
                                " outside 1.." + std::to_string(total()));
    return losmimo::horizontal_index(m, m_h);
}

int UraGeometry::vertical_index(int m) const
{
    if (m < 1 || m > total())
        throw std::out_of_range("vertical_index: location " + std::to_string(m) +
                                " outside 1.." + std::to_string(total()));
    return losmimo::vertical_index(m, m_h);
}

LinkConfig LinkConfig::from_kappa(double distance, double wavelength, double kappa, double snr_db)
{
    if (!std::isfinite(distance) || distance <= 0.0)
        throw std::domain_error("LinkConfig: distance must be positive");
    if (!std::isfinite(wavelength) || wavelength <= 0.0)
        throw std::domain_error("LinkConfig: wavelength must be positive");
    if (!std::isfinite(kappa) || kappa < 0.0 || kappa > 0.5)
        throw std::domain_error("LinkConfig: kappa must lie in [0, 1/2]");
    if (!std::isfinite(snr_db))
        throw std::domain_error("LinkConfig: snr_db must be finite");
    return LinkConfig{distance, wavelength, kappa, snr_db};
}

LinkConfig LinkConfig::from_gamma(double distance, double wavelength, double gamma, double snr_db)
{
    return from_kappa(distance, wavelength, kappa_from_gamma(gamma), snr_db);
}

double LinkConfig::reference_gain() const
{
    const double ratio = wavelength / (4.0 * M_PI * distance);
    return ratio * ratio;
}

double kappa_from_gamma(double gamma)
{
    if (!std::isfinite(gamma) || gamma < 0.0 || gamma > 1.0)
        throw std::domain_error("kappa_from_gamma: gamma must lie in [0, 1]");
    return 2.0 * (1.0 - gamma) * gamma;
}

int horizontal_index(int m, int m_h)
{
    if (m < 1)
        throw std::out_of_range("horizontal_index: location index must be at least 1");
    if (m_h < 1)
        throw std::domain_error("horizontal_index: m_h must be at least 1");
    return m - m_h * ((m - 1) / m_h);
}

int vertical_index(int m, int m_h)
{
    if (m < 1)
        throw std::out_of_range("vertical_index: location index must be at least 1");
    if (m_h < 1)
        throw std::domain_error("vertical_index: m_h must be at least 1");
    return 1 + (m - 1) / m_h;
}

double pairwise_distance(const UraGeometry& g, double dist, int m, int k)
{
    if (!std::isfinite(dist) || dist <= 0.0)
        throw std::domain_error("pairwise_distance: broadside distance must be positive");
    const double di = static_cast<double>(g.horizontal_index(m) - g.horizontal_index(k));
    const double dj = static_cast<double>(g.vertical_index(m) - g.vertical_index(k));
    const double off_h = di * g.delta_h;
    const double off_v = dj * g.delta_v;
    return std::sqrt(dist * dist + off_h * off_h + off_v * off_v);
}

ApertureDims aperture_dimensions(const UraGeometry& g)
{
    ApertureDims dims{};
    dims.l_h = g.delta_h * (g.m_h - 1) + g.width;
    dims.l_v = g.delta_v * (g.m_v - 1) + g.width;
    const double span_h = (g.m_h - 1) * g.delta_h;
    const double span_v = (g.m_v - 1) * g.delta_v;
    dims.diagonal = std::sqrt(span_h * span_h + span_v * span_v);
    dims.aperture_length = std::sqrt(dims.l_h * dims.l_h + dims.l_v * dims.l_v);
    dims.area = dims.l_h * dims.l_v;
    return dims;
}

} // namespace losmimo
