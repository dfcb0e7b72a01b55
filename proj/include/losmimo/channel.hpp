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

#ifndef LOSMIMO_CHANNEL_H
#define LOSMIMO_CHANNEL_H

#include "losmimo/geometry.hpp"
#include "losmimo/matrix.hpp"

namespace losmimo
{
    // Exact: per-pair free-space gains and spherical-wave phases.
    // Approx: common broadside gain and quadratic (Fresnel) phases; tight
    // when the link distance is large against the array diagonal.
    enum class ChannelModelKind
    {
        Exact,
        Approx
    };

    // Free-space gain between isotropic elements at separation dist,
    // (lambda/(4 pi dist))^2
    double channel_gain(const LinkConfig& link, double dist);

    // M x M single-polarized channel. Entry (k, m) couples transmit
    // location m to receive location k; the broadside distance serves as
    // the common phase reference.
    ComplexMatrix build_unpolarized(const LinkConfig& link, const UraGeometry& g,
                                    ChannelModelKind kind);

    // 2x2 polarization coupling [[sqrt(1-kappa), sqrt(kappa)],
    // [sqrt(kappa), sqrt(1-kappa)]]
    ComplexMatrix polarization_matrix(double kappa);

    // 2M x 2M dual-polarized channel, polarization_matrix (x) unpolarized.
    // Rows/columns 1..M carry the first polarization, M+1..2M the second.
    ComplexMatrix build_dual(const LinkConfig& link, const UraGeometry& g,
                             ChannelModelKind kind);

} // namespace losmimo

#endif
