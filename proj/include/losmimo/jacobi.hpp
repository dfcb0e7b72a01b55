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

#ifndef LOSMIMO_JACOBI_H
#define LOSMIMO_JACOBI_H

#include <stdexcept>
#include <vector>

#include "losmimo/matrix.hpp"

namespace losmimo
{
    // Raised when an iterative routine exhausts its budget without meeting
    // its convergence threshold; the message carries the diagnostics.
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct JacobiOptions
    {
        // converged once the off-diagonal Frobenius norm drops below
        // off_tolerance_scale * trace
        double off_tolerance_scale = 1e-12;
        int max_sweeps = 100;
    };

    // Eigenvalues (unordered) of a Hermitian matrix by Jacobi rotations.
    //
    // The default kernel runs one round-robin round of pairwise-disjoint
    // rotations at a time; rotation angles are computed from a snapshot
    // before the round is applied, so the result is identical for any
    // thread count. The serial variant is the classic row-cyclic sweep with
    // immediate updates, kept as the reference for tests and benchmarks.
    //
    // Throws NumericalError if max_sweeps is exhausted before convergence.
    std::vector<double> hermitian_eigenvalues(ComplexMatrix a, const JacobiOptions& opts = {});
    std::vector<double> hermitian_eigenvalues_serial(ComplexMatrix a, const JacobiOptions& opts = {});

} // namespace losmimo

#endif
