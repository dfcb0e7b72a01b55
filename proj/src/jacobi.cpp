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

#include "losmimo/jacobi.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace losmimo
{
namespace
{

using Complex = std::complex<double>;

// One plane rotation acting on coordinates (p, q). The unitary is
//   V = [ c        s   ]
//       [ -u*s     u*c ]
// with real c, s and unit-modulus u chosen so that V^H A V has a zero
// (p, q) entry. skip marks a pivot that is already zero.
struct Rotation
{
    int p = 0;
    int q = 0;
    double c = 1.0;
    double s = 0.0;
    Complex u{1.0, 0.0};
    bool skip = true;
};

Rotation make_rotation(const ComplexMatrix& a, int p, int q)
{
    Rotation rot;
    rot.p = p;
    rot.q = q;

    // symmetric read; protects the angle against round-off drift between
    // the two triangles
    const Complex apq = 0.5 * (a(p, q) + std::conj(a(q, p)));
    const double mag = std::abs(apq);
    if (mag == 0.0)
        return rot;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    rot.c = 1.0 / std::sqrt(1.0 + t * t);
    rot.s = t * rot.c;
    rot.u = std::conj(apq) / mag;
    rot.skip = false;
    return rot;
}

// A <- A V, touching only columns p and q
void apply_columns(ComplexMatrix& a, const Rotation& r)
{
    const int n = a.rows();
    const Complex us = r.u * r.s;
    const Complex uc = r.u * r.c;
    for (int row = 0; row < n; ++row)
    {
        const Complex ap = a(row, r.p);
        const Complex aq = a(row, r.q);
        a(row, r.p) = r.c * ap - us * aq;
        a(row, r.q) = r.s * ap + uc * aq;
    }
}

// A <- V^H A, touching only rows p and q
void apply_rows(ComplexMatrix& a, const Rotation& r)
{
    const int n = a.cols();
    const Complex cus = std::conj(r.u) * r.s;
    const Complex cuc = std::conj(r.u) * r.c;
    Complex* row_p = a.data() + static_cast<std::size_t>(r.p) * n;
    Complex* row_q = a.data() + static_cast<std::size_t>(r.q) * n;
    for (int col = 0; col < n; ++col)
    {
        const Complex ap = row_p[col];
        const Complex aq = row_q[col];
        row_p[col] = r.c * ap - cus * aq;
        row_q[col] = r.s * ap + cuc * aq;
    }
}

// the rotated pivot entries are zero/real in exact arithmetic; pin them
void settle_pivot(ComplexMatrix& a, const Rotation& r)
{
    a(r.p, r.q) = Complex{0.0, 0.0};
    a(r.q, r.p) = Complex{0.0, 0.0};
    a(r.p, r.p) = Complex{a(r.p, r.p).real(), 0.0};
    a(r.q, r.q) = Complex{a(r.q, r.q).real(), 0.0};
}

double offdiag_norm(const ComplexMatrix& a)
{
    const int n = a.rows();
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

double diagonal_trace(const ComplexMatrix& a)
{
    double tr = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        tr += a(i, i).real();
    return tr;
}

std::vector<double> diagonal_of(const ComplexMatrix& a)
{
    std::vector<double> d(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        d[static_cast<std::size_t>(i)] = a(i, i).real();
    return d;
}

void require_square(const ComplexMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::domain_error("hermitian_eigenvalues: matrix must be square");
    if (!a.is_finite())
        throw std::domain_error("hermitian_eigenvalues: matrix has non-finite entries");
}

[[noreturn]] void throw_no_convergence(int n, int sweeps, double off, double threshold)
{
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: no convergence for n=" << n << " after " << sweeps
        << " sweeps (off-diagonal norm " << off << ", threshold " << threshold << ")";
    throw NumericalError(msg.str());
}

// Round-robin tournament schedule: players-1 rounds of players/2 disjoint
// pairs covering every pair exactly once. players must be even; indices
// >= n act as byes.
std::vector<std::vector<std::pair<int, int>>> round_robin_rounds(int players)
{
    std::vector<int> seat(players);
    for (int i = 0; i < players; ++i)
        seat[static_cast<std::size_t>(i)] = i;

    std::vector<std::vector<std::pair<int, int>>> rounds;
    for (int r = 0; r < players - 1; ++r)
    {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < players / 2; ++i)
            pairs.emplace_back(seat[static_cast<std::size_t>(i)],
                               seat[static_cast<std::size_t>(players - 1 - i)]);
        rounds.push_back(std::move(pairs));
        // rotate everything but seat[0]
        const int last = seat[static_cast<std::size_t>(players - 1)];
        for (int i = players - 1; i > 1; --i)
            seat[static_cast<std::size_t>(i)] = seat[static_cast<std::size_t>(i - 1)];
        seat[1] = last;
    }
    return rounds;
}

} // namespace

std::vector<double> hermitian_eigenvalues(ComplexMatrix a, const JacobiOptions& opts)
{
    require_square(a);
    const int n = a.rows();
    if (n <= 1)
        return diagonal_of(a);

    const int players = (n % 2 == 0) ? n : n + 1;
    const auto rounds = round_robin_rounds(players);
    const double threshold = opts.off_tolerance_scale * diagonal_trace(a);

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep)
    {
        const double off = offdiag_norm(a);
        if (off <= threshold)
            return diagonal_of(a);

        for (const auto& round : rounds)
        {
            std::vector<Rotation> rots;
            rots.reserve(round.size());
            for (const auto& [p, q] : round)
            {
                if (p >= n || q >= n)
                    continue; // bye
                rots.push_back(make_rotation(a, p, q));
            }
            const int n_rots = static_cast<int>(rots.size());

            // disjoint column sets per rotation, then disjoint row sets
#pragma omp parallel for schedule(static)
            for (int i = 0; i < n_rots; ++i)
                if (!rots[static_cast<std::size_t>(i)].skip)
                    apply_columns(a, rots[static_cast<std::size_t>(i)]);

#pragma omp parallel for schedule(static)
            for (int i = 0; i < n_rots; ++i)
                if (!rots[static_cast<std::size_t>(i)].skip)
                    apply_rows(a, rots[static_cast<std::size_t>(i)]);

            for (const auto& rot : rots)
                if (!rot.skip)
                    settle_pivot(a, rot);
        }
    }

    throw_no_convergence(n, opts.max_sweeps, offdiag_norm(a), threshold);
}

std::vector<double> hermitian_eigenvalues_serial(ComplexMatrix a, const JacobiOptions& opts)
{
    require_square(a);
    const int n = a.rows();
    if (n <= 1)
        return diagonal_of(a);

    const double threshold = opts.off_tolerance_scale * diagonal_trace(a);

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep)
    {
        const double off = offdiag_norm(a);
        if (off <= threshold)
            return diagonal_of(a);

        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
            {
                const Rotation rot = make_rotation(a, p, q);
                if (rot.skip)
                    continue;
                apply_columns(a, rot);
                apply_rows(a, rot);
                settle_pivot(a, rot);
            }
    }

    throw_no_convergence(n, opts.max_sweeps, offdiag_norm(a), threshold);
}

} // namespace losmimo
