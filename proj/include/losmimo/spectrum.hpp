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

#ifndef LOSMIMO_SPECTRUM_H
#define LOSMIMO_SPECTRUM_H

#include <vector>

#include "losmimo/channel.hpp"
#include "losmimo/geometry.hpp"
#include "losmimo/matrix.hpp"

namespace losmimo
{
    // Eigenvalues of a Gram matrix h^H h, sorted descending, nonnegative.
    struct Spectrum
    {
        std::vector<double> eigenvalues;
        double trace = 0.0; // sum of the eigenvalues
    };

    Spectrum gram_spectrum(const ComplexMatrix& h);

    // same result through the serial Gram and eigensolver kernels
    Spectrum gram_spectrum_serial(const ComplexMatrix& h);

    // Round-off handling behind gram_spectrum, exposed for tests: values in
    // (-1e-9 * trace, 0) clamp to zero, anything more negative is treated
    // as a solver failure and raises NumericalError.
    std::vector<double> clamp_nonnegative(std::vector<double> values, double trace);

    struct CapacityResult
    {
        double capacity = 0.0;              // bits per symbol
        std::vector<double> allocations;    // per-eigenvalue power, input order
        double water_level = 0.0;
        int active_count = 0;
    };

    // Water-filling power allocation over the spectrum: maximizes
    // sum log2(1 + q_i g_i / noise) subject to sum q_i = total_power,
    // q_i >= 0. Closed-form water level per active set; zero eigenvalues
    // get zero power. Throws std::domain_error when every eigenvalue is
    // zero (zero-capacity channel).
    CapacityResult waterfill(const Spectrum& spectrum, double total_power,
                             double noise_variance);

    // Capacity of the dual-polarized link: builds the 2M x 2M channel,
    // takes its Gram spectrum and water-fills with sigma^2 = 1 and
    // P = 10^(snr_db/10) / reference_gain.
    CapacityResult capacity_of_link(const LinkConfig& link, const UraGeometry& g,
                                    ChannelModelKind kind);

    // Same power budget applied to the M x M single-polarized channel.
    CapacityResult capacity_of_link_single_pol(const LinkConfig& link,
                                               const UraGeometry& g,
                                               ChannelModelKind kind);

} // namespace losmimo

#endif
