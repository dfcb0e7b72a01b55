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

// End-to-end verification of the library's headline numbers: ten checks,
// one printed line each, nonzero exit when any of them fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "losmimo/experiments.hpp"
#include "losmimo/jacobi.hpp"

using namespace losmimo;

namespace
{

struct Outcome
{
    bool pass = true;
    std::string detail;
};

const LinkConfig kLink = LinkConfig::from_kappa(100.0, 0.01, 0.0, 25.0);

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// 1. closed-form optimal spacing for the 8x8 square array
Outcome check_optimal_spacing()
{
    const double spacing = optimal_spacing(kLink, 8);
    Outcome out;
    out.pass = std::abs(spacing - 0.3535533906) < 1e-10 &&
               std::abs(spacing - 0.3535) < 1e-4;
    out.detail = "spacing = " + fmt(spacing) + " m";
    return out;
}

// 2. flat Gram at the optimum for every factorization in {1,2,4,8}^2
Outcome check_gram_identity()
{
    double worst = 0.0;
    int worst_mh = 0, worst_mv = 0;
    for (int mh : {1, 2, 4, 8})
        for (int mv : {1, 2, 4, 8})
        {
            UraGeometry g(mh, mv, optimal_spacing(kLink, mh), optimal_spacing(kLink, mv),
                          0.005);
            const auto gr = gram(build_unpolarized(kLink, g, ChannelModelKind::Approx));
            const double diag = kLink.reference_gain() * g.total();
            for (int i = 0; i < gr.rows(); ++i)
                for (int j = 0; j < gr.cols(); ++j)
                    if (i != j && std::abs(gr(i, j)) / diag > worst)
                    {
                        worst = std::abs(gr(i, j)) / diag;
                        worst_mh = mh;
                        worst_mv = mv;
                    }
        }
    Outcome out;
    out.pass = worst < 1e-8;
    out.detail = "max off-diagonal " + fmt(worst) + " of beta*M (worst at " +
                 std::to_string(worst_mh) + "x" + std::to_string(worst_mv) + ")";
    return out;
}

// 3. reference setup clears 900 bit/symbol and matches the closed form
Outcome check_capacity_threshold()
{
    const double spacing = optimal_spacing(kLink, 8);
    UraGeometry g(8, 8, spacing, spacing, 0.005);
    const double capacity = capacity_of_link(kLink, g, ChannelModelKind::Approx).capacity;
    const double closed = 128.0 * std::log2(1.0 + std::pow(10.0, 2.5) / 2.0);
    const double rel = std::abs(capacity - closed) / closed;
    Outcome out;
    out.pass = capacity > 900.0 && rel < 1e-6;
    out.detail = "capacity = " + fmt(capacity) + " bit/symbol, closed form " + fmt(closed) +
                 ", rel diff " + fmt(rel);
    return out;
}

// 4. spherical-wave vs quadratic-phase tightness at the optimum, and the
// default-grid sweep peak location
Outcome check_exact_vs_approx()
{
    const double spacing = optimal_spacing(kLink, 8);
    UraGeometry g(8, 8, spacing, spacing, 0.005);
    const double exact = capacity_of_link(kLink, g, ChannelModelKind::Exact).capacity;
    const double approx = capacity_of_link(kLink, g, ChannelModelKind::Approx).capacity;
    const double rel = std::abs(exact - approx) / exact;
    const bool tight = rel < 1e-2;

    ConfigEntries entries = {{"distance", "100"}, {"wavelength", "0.01"},
                             {"snr_db", "25"},    {"m_h", "8"},
                             {"m_v", "8"},        {"model", "exact"}};
    const auto sweep = run_spacing_sweep(ExperimentConfig::from_entries(entries));
    double best_delta = 0.0, best_capacity = -1.0;
    for (const auto& row : sweep.rows)
        if (row[1] > best_capacity)
        {
            best_capacity = row[1];
            best_delta = row[0];
        }
    const bool peak_near_optimum = std::abs(best_delta - 0.35355) <= 0.0025;

    Outcome out;
    out.pass = tight && peak_near_optimum;
    out.detail = "rel capacity gap " + fmt(rel) + "; grid maximizer " + fmt(best_delta) +
                 " m (" + fmt(best_capacity) + " bit/symbol)" +
                 (peak_near_optimum ? "" : " outside 0.35355 +- 0.0025");
    return out;
}

// 5. line minimizes area, square minimizes aperture length; 64-antenna
// square side near 2.4799 m
Outcome check_geometry_optimization()
{
    Outcome out;
    std::ostringstream detail;
    for (int total : {4, 16, 64, 256})
    {
        const auto area = optimize_factorization(total, kLink, 0.005,
                                                 GeometryObjective::Area);
        const auto len = optimize_factorization(total, kLink, 0.005,
                                                GeometryObjective::ApertureLength);
        const int root = static_cast<int>(std::lround(std::sqrt(total)));
        if (!((area.m_h == 1 || area.m_v == 1) && len.m_h == root && len.m_v == root))
        {
            out.pass = false;
            detail << "M=" << total << " returned area " << area.m_h << "x" << area.m_v
                   << ", length " << len.m_h << "x" << len.m_v << "; ";
        }
        if (total == 64)
        {
            if (std::abs(len.l_h - 2.4799) > 1e-4 || std::abs(len.l_v - 2.4799) > 1e-4)
            {
                out.pass = false;
                detail << "64-antenna square side " << fmt(len.l_h) << " m; ";
            }
            else
                detail << "64-antenna square side " << fmt(len.l_h) << " m";
        }
    }
    out.detail = detail.str();
    return out;
}

// 6. dual-channel eigenvalues are the pairwise products of the coupling
// and unpolarized spectra
Outcome check_spectrum_factorization()
{
    double worst = 0.0;
    for (double kappa : {0.0, 0.1, 0.5})
        for (const auto& [mh, mv, dh, dv] :
             {std::tuple{8, 8, 0.29, 0.29}, {4, 3, 0.21, 0.17},
              {8, 8, std::sqrt(1.0 / 8.0), std::sqrt(1.0 / 8.0)}})
        {
            const auto link = LinkConfig::from_kappa(100.0, 0.01, kappa, 25.0);
            UraGeometry g(mh, mv, dh, dv, 0.005);
            const auto hu = build_unpolarized(link, g, ChannelModelKind::Approx);
            const auto sd = gram_spectrum(build_dual(link, g, ChannelModelKind::Approx));
            const auto su = gram_spectrum(hu);
            const auto sk = gram_spectrum(polarization_matrix(kappa));

            std::vector<double> products;
            for (double mu : sk.eigenvalues)
                for (double gi : su.eigenvalues)
                    products.push_back(mu * gi);
            std::sort(products.begin(), products.end(), std::greater<>());

            const double scale = products.front();
            for (std::size_t i = 0; i < products.size(); ++i)
                worst = std::max(worst,
                                 std::abs(products[i] - sd.eigenvalues[i]) / scale);
        }
    Outcome out;
    out.pass = worst < 1e-8;
    out.detail = "max relative eigenvalue mismatch " + fmt(worst);
    return out;
}

// 7. closed-form two-level allocation against general water-filling over
// a leakage/SNR grid with both branches exercised
Outcome check_two_level_allocation()
{
    const double beta = kLink.reference_gain();
    int points = 0, low_branch = 0, high_branch = 0;
    double worst = 0.0;
    for (double kappa = 0.0; kappa <= 0.501; kappa += 0.05)
        for (double snr_db = -30.0; snr_db <= 30.01; snr_db += 5.0)
        {
            const auto mu = polarization_eigenvalues(std::min(kappa, 0.5));
            const double power = std::pow(10.0, snr_db / 10.0) / beta;
            const auto alloc = two_level_allocation(mu, beta, 64, power, 1.0);
            (power <= alloc.threshold_power) ? ++low_branch : ++high_branch;

            Spectrum s;
            s.eigenvalues.assign(64, mu.mu1 * beta * 64.0);
            s.eigenvalues.insert(s.eigenvalues.end(), 64, mu.mu2 * beta * 64.0);
            for (double v : s.eigenvalues)
                s.trace += v;
            const auto wf = waterfill(s, power, 1.0);

            const double scale = std::max(power / 64.0, 1e-300);
            worst = std::max(worst, std::abs(alloc.q1 - wf.allocations.front()) / scale);
            worst = std::max(worst, std::abs(alloc.q2 - wf.allocations.back()) / scale);
            ++points;
        }
    Outcome out;
    out.pass = worst < 1e-9 && points >= 50 && low_branch > 0 && high_branch > 0;
    out.detail = std::to_string(points) + " grid points (" + std::to_string(low_branch) +
                 " low, " + std::to_string(high_branch) +
                 " high), max allocation mismatch " + fmt(worst) + " of P/M";
    return out;
}

// 8. leakage helps at low SNR and hurts at high SNR
Outcome check_xpd_monotonicity()
{
    ConfigEntries entries = {{"distance", "100"}, {"wavelength", "0.01"},
                             {"m", "64"},         {"snr_db", "25"}};
    const auto high = run_xpd_sweep(ExperimentConfig::from_entries(entries));
    apply_override(entries, "snr_db=-20");
    const auto low = run_xpd_sweep(ExperimentConfig::from_entries(entries));

    bool decreasing = true, increasing = true;
    for (std::size_t i = 1; i < high.rows.size(); ++i)
    {
        decreasing = decreasing && high.rows[i][1] < high.rows[i - 1][1];
        increasing = increasing && low.rows[i][1] > low.rows[i - 1][1];
    }
    Outcome out;
    out.pass = decreasing && increasing && high.rows.size() == 10;
    out.detail = std::string("25 dB ") + (decreasing ? "decreasing" : "NOT decreasing") +
                 ", -20 dB " + (increasing ? "increasing" : "NOT increasing") +
                 " across kappa 0..0.45";
    return out;
}

// 9. total channel power is conserved across the leakage range
Outcome check_frobenius_conservation()
{
    UraGeometry g(8, 8, 0.31, 0.27, 0.005);
    double gain_sum = 0.0;
    for (int m = 1; m <= g.total(); ++m)
        for (int k = 1; k <= g.total(); ++k)
            gain_sum += channel_gain(kLink, pairwise_distance(g, kLink.distance, m, k));
    const double expected = 2.0 * gain_sum;

    double worst = 0.0;
    for (double kappa : {0.0, 0.1, 0.25, 0.5})
    {
        const auto link = LinkConfig::from_kappa(100.0, 0.01, kappa, 25.0);
        const double norm_sq =
            build_dual(link, g, ChannelModelKind::Exact).frobenius_norm_sq();
        worst = std::max(worst, std::abs(norm_sq - expected) / expected);
    }
    Outcome out;
    out.pass = worst < 1e-12;
    out.detail = "max relative deviation from 2*sum(beta) = " + fmt(worst);
    return out;
}

// 10. geometry sweep: area peaks at the square and falls toward the line
// ends, aperture length does the opposite
Outcome check_geometry_sweep_shape()
{
    ConfigEntries entries = {{"distance", "100"}, {"wavelength", "0.01"}, {"m", "64, 256"}};
    const auto sweep = run_geometry_sweep(ExperimentConfig::from_entries(entries));

    Outcome out;
    for (int total : {64, 256})
    {
        std::vector<double> areas, lengths;
        for (const auto& row : sweep.rows)
            if (static_cast<int>(row[0]) == total)
            {
                areas.push_back(row[7]);
                lengths.push_back(row[8]);
            }
        const std::size_t square = areas.size() / 2; // odd count, middle is the square
        for (std::size_t i = 1; i < areas.size(); ++i)
        {
            const bool rising = i <= square;
            if (rising != (areas[i] > areas[i - 1]) || rising != (lengths[i] < lengths[i - 1]))
                out.pass = false;
        }
    }
    out.detail = out.pass ? "area unimodal (max at square), aperture length unimodal "
                            "(min at square) for M = 64 and 256"
                          : "monotonicity toward/away from the square broken";
    return out;
}

} // namespace

int main()
{
    struct Criterion
    {
        const char* name;
        std::function<Outcome()> run;
    };

    const std::vector<Criterion> criteria = {
        {"optimal-spacing reproduction", check_optimal_spacing},
        {"Gram identity at optimal spacing", check_gram_identity},
        {"capacity threshold at the reference setup", check_capacity_threshold},
        {"exact-vs-approximate tightness and sweep peak", check_exact_vs_approx},
        {"geometry optimization", check_geometry_optimization},
        {"spectrum factorization", check_spectrum_factorization},
        {"two-level allocation oracle", check_two_level_allocation},
        {"leakage monotonicity", check_xpd_monotonicity},
        {"channel power conservation", check_frobenius_conservation},
        {"geometry sweep shape", check_geometry_sweep_shape},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Outcome outcome;
        try
        {
            outcome = criteria[i].run();
        }
        catch (const std::exception& e)
        {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        if (!outcome.pass)
            ++failures;
        std::printf("criterion %2zu %s  %s (%s)\n", i + 1, outcome.pass ? "PASS" : "FAIL",
                    criteria[i].name, outcome.detail.c_str());
        std::fflush(stdout);
    }

    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
