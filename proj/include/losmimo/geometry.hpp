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

#ifndef LOSMIMO_GEOMETRY_H
#define LOSMIMO_GEOMETRY_H

namespace losmimo
{
    // Uniform rectangular array: m_v rows of m_h antenna locations on a
    // regular grid. Spacings and element width are in meters. Antenna
    // locations are numbered 1..m_h*m_v, row by row.
    struct UraGeometry
    {
        int m_h = 1;          // antennas per horizontal row
        int m_v = 1;          // number of vertical rows
        double delta_h = 0.0; // horizontal spacing [m]
        double delta_v = 0.0; // vertical spacing [m]
        double width = 0.0;   // physical width of one element [m]

        UraGeometry(int m_h, int m_v, double delta_h, double delta_v, double width);

        int total() const { return m_h * m_v; }

        // Grid indices of the 1-based location m, range-checked against total()
        int horizontal_index(int m) const;
        int vertical_index(int m) const;
    };

    // Physical scenario of one point-to-point link. The polarization
    // leakage kappa = 2*(1-gamma)*gamma is stored as the authoritative
    // cross-polarization parameter; snr_db encodes P*beta/sigma^2.
    struct LinkConfig
    {
        double distance;   // broadside separation of the two arrays [m]
        double wavelength; // carrier wavelength [m]
        double kappa;      // fraction of power leaking into the other polarization
        double snr_db;

        static LinkConfig from_kappa(double distance, double wavelength,
                                     double kappa, double snr_db);
        static LinkConfig from_gamma(double distance, double wavelength,
                                     double gamma, double snr_db);

        // Free-space gain at the broadside distance, (lambda/(4 pi d))^2
        double reference_gain() const;
    };

    // kappa = 2*(1-gamma)*gamma for an antenna radiating a fraction gamma of
    // its power into the unintended polarization; maps [0,1] onto [0,1/2]
    double kappa_from_gamma(double gamma);

    // Column index i(m) = m - m_h*floor((m-1)/m_h) of the 1-based location m
    int horizontal_index(int m, int m_h);

    // Row index j(m) = 1 + floor((m-1)/m_h)
    int vertical_index(int m, int m_h);

    // Distance between transmit location m and receive location k of two
    // identical broadside-aligned arrays separated by dist
    double pairwise_distance(const UraGeometry& g, double dist, int m, int k);

    struct ApertureDims
    {
        double l_h;             // horizontal side length, delta_h*(m_h-1) + width
        double l_v;             // vertical side length
        double diagonal;        // distance between the outermost antenna locations
        double aperture_length; // sqrt(l_h^2 + l_v^2)
        double area;            // l_h * l_v
    };

    ApertureDims aperture_dimensions(const UraGeometry& g);

} // namespace losmimo

#endif
