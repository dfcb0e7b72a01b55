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

#ifndef LOSMIMO_MATRIX_H
#define LOSMIMO_MATRIX_H

#include <complex>
#include <vector>

namespace losmimo
{
    // Dense complex matrix, row-major, double precision. Sized for desk-scale
    // channel work (a few hundred rows); no structure-exploiting storage.
    class ComplexMatrix
    {
    public:
        using value_type = std::complex<double>;

        ComplexMatrix() = default;
        ComplexMatrix(int rows, int cols); // zero-initialized

        static ComplexMatrix identity(int n);

        int rows() const { return rows_; }
        int cols() const { return cols_; }

        value_type& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
        const value_type& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

        value_type* data() { return entries_.data(); }
        const value_type* data() const { return entries_.data(); }

        double frobenius_norm_sq() const;
        bool is_finite() const;

    private:
        int rows_ = 0;
        int cols_ = 0;
        std::vector<value_type> entries_;
    };

    // Standard Kronecker product; dimensions multiply
    ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

    // Gram product a^H a. The default kernel parallelizes over output rows
    // with a fixed per-entry summation order, so results are identical for
    // any thread count. gram_serial is the plain reference kept for tests
    // and benchmarks.
    ComplexMatrix gram(const ComplexMatrix& a);
    ComplexMatrix gram_serial(const ComplexMatrix& a);

} // namespace losmimo

#endif
