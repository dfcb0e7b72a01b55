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

#include "losmimo/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace losmimo
{

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw std::domain_error("ComplexMatrix: negative dimensions");
    entries_.assign(static_cast<std::size_t>(rows) * cols, value_type{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int n)
{
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

double ComplexMatrix::frobenius_norm_sq() const
{
    double sum = 0.0;
    for (const auto& z : entries_)
        sum += std::norm(z);
    return sum;
}

bool ComplexMatrix::is_finite() const
{
    for (const auto& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja)
        {
            const auto scale = a(ia, ja);
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = scale * b(ib, jb);
        }
    return out;
}

ComplexMatrix gram(const ComplexMatrix& a)
{
    const int n = a.cols();
    const int r = a.rows();
    ComplexMatrix g(n, n);

    // a^H laid out row-major so both scans in the inner product are contiguous
    ComplexMatrix ah(n, r);
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < n; ++i)
            ah(i, k) = std::conj(a(k, i));

#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < n; ++i)
    {
        const auto* row_i = ah.data() + static_cast<std::size_t>(i) * r;
        for (int j = i; j < n; ++j)
        {
            const auto* row_j = ah.data() + static_cast<std::size_t>(j) * r;
            std::complex<double> acc{0.0, 0.0};
            for (int k = 0; k < r; ++k)
                acc += row_i[k] * std::conj(row_j[k]);
            g(i, j) = acc;
            g(j, i) = std::conj(acc);
        }
    }
    return g;
}

ComplexMatrix gram_serial(const ComplexMatrix& a)
{
    const int n = a.cols();
    const int r = a.rows();
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
        {
            std::complex<double> acc{0.0, 0.0};
            for (int k = 0; k < r; ++k)
                acc += std::conj(a(k, i)) * a(k, j);
            g(i, j) = acc;
        }
    return g;
}

} // namespace losmimo
