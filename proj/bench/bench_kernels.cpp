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

// Times the OpenMP kernels against their serial references on realistic
// channel matrices and reports the spectrum deviation between the two
// paths. Usage: bench_kernels [m_h ...] (default 4 6 8, i.e. dual sizes
// 32, 72, 128).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "losmimo/design.hpp"
#include "losmimo/jacobi.hpp"
#include "losmimo/spectrum.hpp"

using namespace losmimo;
using Clock = std::chrono::steady_clock;

namespace
{

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename F>
double time_best_of(int repeats, F&& f)
{
    double best = 1e300;
    for (int i = 0; i < repeats; ++i)
    {
        const auto start = Clock::now();
        f();
        best = std::min(best, ms_since(start));
    }
    return best;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<int> sides = {4, 6, 8};
    if (argc > 1)
    {
        sides.clear();
        for (int i = 1; i < argc; ++i)
            sides.push_back(std::atoi(argv[i]));
    }

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n");
#endif
    std::printf("%6s %6s | %12s %12s %8s | %12s %12s %8s | %12s\n", "m_h", "n", "gram_ser",
                "gram_par", "speedup", "eig_ser", "eig_par", "speedup", "spec_dev");

    const auto link = LinkConfig::from_kappa(100.0, 0.01, 0.1, 25.0);
    for (int side : sides)
    {
        const double spacing = 0.8 * optimal_spacing(link, side); // detuned: full sweeps
        UraGeometry g(side, side, spacing, spacing, 0.005);
        const auto h = build_dual(link, g, ChannelModelKind::Exact);
        const int n = h.cols();
        const int repeats = n <= 100 ? 5 : 3;

        ComplexMatrix gram_par, gram_ser;
        const double t_gram_ser = time_best_of(repeats, [&] { gram_ser = gram_serial(h); });
        const double t_gram_par = time_best_of(repeats, [&] { gram_par = gram(h); });

        std::vector<double> eig_ser, eig_par;
        const double t_eig_ser =
            time_best_of(repeats, [&] { eig_ser = hermitian_eigenvalues_serial(gram_ser); });
        const double t_eig_par =
            time_best_of(repeats, [&] { eig_par = hermitian_eigenvalues(gram_par); });

        std::sort(eig_ser.begin(), eig_ser.end());
        std::sort(eig_par.begin(), eig_par.end());
        double dev = 0.0;
        const double scale = std::abs(eig_ser.back());
        for (std::size_t i = 0; i < eig_ser.size(); ++i)
            dev = std::max(dev, std::abs(eig_ser[i] - eig_par[i]) / scale);

        std::printf("%6d %6d | %9.3f ms %9.3f ms %7.2fx | %9.3f ms %9.3f ms %7.2fx | %12.3e\n",
                    side, n, t_gram_ser, t_gram_par, t_gram_ser / t_gram_par, t_eig_ser,
                    t_eig_par, t_eig_ser / t_eig_par, dev);
    }
    return 0;
}
