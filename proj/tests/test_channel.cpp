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

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "losmimo/channel.hpp"
#include "oracles.hpp"

using namespace losmimo;

namespace
{
const LinkConfig kLink = LinkConfig::from_kappa(100.0, 0.01, 0.0, 25.0);
const double kOptSpacing = std::sqrt(0.01 * 100.0 / 8.0);
} // namespace

TEST_CASE("free-space gain")
{
    const auto unit = LinkConfig::from_kappa(1.0, 4.0 * M_PI, 0.0, 0.0);
    CHECK(channel_gain(unit, 1.0) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(channel_gain(kLink, 100.0) ==
          doctest::Approx(6.332573977646111e-11).epsilon(1e-14));
    CHECK(channel_gain(kLink, 100.0) / channel_gain(kLink, 200.0) ==
          doctest::Approx(4.0).epsilon(1e-15));

    CHECK_THROWS_AS(channel_gain(kLink, 0.0), std::domain_error);
    CHECK_THROWS_AS(channel_gain(kLink, -5.0), std::domain_error);
}

TEST_CASE("single-antenna channel collapses to the broadside amplitude")
{
    UraGeometry g(1, 1, 0.0, 0.0, 0.005);
    const double sqrt_beta = std::sqrt(kLink.reference_gain());
    for (auto kind : {ChannelModelKind::Exact, ChannelModelKind::Approx})
    {
        const auto h = build_unpolarized(kLink, g, kind);
        REQUIRE(h.rows() == 1);
        REQUIRE(h.cols() == 1);
        CHECK(h(0, 0).real() == doctest::Approx(sqrt_beta).epsilon(1e-15));
        CHECK(h(0, 0).imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("quadratic-phase model has constant amplitude")
{
    UraGeometry g(8, 8, kOptSpacing, kOptSpacing, 0.005);
    const auto h = build_unpolarized(kLink, g, ChannelModelKind::Approx);
    const double sqrt_beta = std::sqrt(kLink.reference_gain());
    for (int k = 0; k < h.rows(); ++k)
    {
        CHECK(h(k, k).real() == doctest::Approx(sqrt_beta).epsilon(1e-15));
        CHECK(h(k, k).imag() == doctest::Approx(0.0));
        for (int m = 0; m < h.cols(); ++m)
            CHECK(std::abs(h(k, m)) == doctest::Approx(sqrt_beta).epsilon(1e-14));
    }
    // sum of 64^2 entries of squared magnitude beta
    CHECK(h.frobenius_norm_sq() == doctest::Approx(2.593822301243847e-07).epsilon(1e-12));
}

TEST_CASE("spherical-wave entries carry the per-pair gain")
{
    UraGeometry g(4, 2, 0.4, 0.3, 0.005);
    const auto h = build_unpolarized(kLink, g, ChannelModelKind::Exact);
    const double sqrt_beta = std::sqrt(kLink.reference_gain());
    for (int k = 1; k <= g.total(); ++k)
        for (int m = 1; m <= g.total(); ++m)
        {
            const double dist = pairwise_distance(g, kLink.distance, m, k);
            const double amp = std::sqrt(channel_gain(kLink, dist));
            CHECK(std::abs(h(k - 1, m - 1)) == doctest::Approx(amp).epsilon(1e-14));
            CHECK(std::abs(h(k - 1, m - 1)) <= sqrt_beta * (1.0 + 1e-15));
            // reference phase cancels on aligned pairs
            if (m == k)
                CHECK(h(k - 1, m - 1).real() == doctest::Approx(amp).epsilon(1e-15));
        }
}

TEST_CASE("polarization coupling matrix")
{
    const auto id = polarization_matrix(0.0);
    CHECK(id(0, 0).real() == 1.0);
    CHECK(id(0, 1).real() == 0.0);
    CHECK(id(1, 0).real() == 0.0);
    CHECK(id(1, 1).real() == 1.0);

    const auto half = polarization_matrix(0.5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(half(i, j).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    const auto k = polarization_matrix(0.18);
    CHECK(k(0, 0).real() == doctest::Approx(0.9055385138137416).epsilon(1e-15));
    CHECK(k(0, 1).real() == doctest::Approx(0.4242640687119285).epsilon(1e-15));
    CHECK(k(1, 0) == k(0, 1));
    CHECK(k(1, 1) == k(0, 0));

    CHECK_THROWS_AS(polarization_matrix(-0.01), std::domain_error);
    CHECK_THROWS_AS(polarization_matrix(0.51), std::domain_error);
}

TEST_CASE("dual-polarized channel equals the block construction entry for entry")
{
    UraGeometry g(3, 2, 0.21, 0.34, 0.005);
    for (double kappa : {0.0, 0.18})
    {
        const auto link = LinkConfig::from_kappa(100.0, 0.01, kappa, 25.0);
        const auto h = build_unpolarized(link, g, ChannelModelKind::Exact);
        const auto dual = build_dual(link, g, ChannelModelKind::Exact);
        const auto blocks = oracles::block_dual(h, kappa);
        REQUIRE(dual.rows() == 2 * g.total());
        REQUIRE(dual.cols() == 2 * g.total());
        for (int i = 0; i < dual.rows(); ++i)
            for (int j = 0; j < dual.cols(); ++j)
                CHECK(std::abs(dual(i, j) - blocks(i, j)) <= 1e-15);
    }
}

TEST_CASE("single-location dual channel is the scaled coupling matrix")
{
    UraGeometry g(1, 1, 0.0, 0.0, 0.005);
    const auto link = LinkConfig::from_kappa(100.0, 0.01, 0.18, 25.0);
    const auto dual = build_dual(link, g, ChannelModelKind::Exact);
    const auto k = polarization_matrix(0.18);
    const double sqrt_beta = std::sqrt(link.reference_gain());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs(dual(i, j) - sqrt_beta * k(i, j)) <= 1e-16);
}

TEST_CASE("total channel power is independent of the polarization leakage")
{
    UraGeometry g(4, 4, 0.3, 0.3, 0.005);

    // exact model: twice the sum of all pairwise gains
    double gain_sum = 0.0;
    for (int m = 1; m <= g.total(); ++m)
        for (int k = 1; k <= g.total(); ++k)
            gain_sum += channel_gain(kLink, pairwise_distance(g, kLink.distance, m, k));

    double previous = -1.0;
    for (double kappa : {0.0, 0.1, 0.25, 0.5})
    {
        const auto link = LinkConfig::from_kappa(100.0, 0.01, kappa, 25.0);
        const double norm_sq =
            build_dual(link, g, ChannelModelKind::Exact).frobenius_norm_sq();
        CHECK(norm_sq == doctest::Approx(2.0 * gain_sum).epsilon(1e-12));
        if (previous >= 0.0)
            CHECK(norm_sq == doctest::Approx(previous).epsilon(1e-12));
        previous = norm_sq;

        // quadratic-phase model: exactly 2 beta M^2
        const double approx_norm =
            build_dual(link, g, ChannelModelKind::Approx).frobenius_norm_sq();
        const double m2 = static_cast<double>(g.total()) * g.total();
        CHECK(approx_norm ==
              doctest::Approx(2.0 * link.reference_gain() * m2).epsilon(1e-13));
    }
}
