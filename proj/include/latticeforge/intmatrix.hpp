/*
   Copyright 2026 the LatticeForge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LATTICEFORGE_INTMATRIX_HPP
#define LATTICEFORGE_INTMATRIX_HPP

#include <cstddef>
#include <vector>

#include "latticeforge/numeric.hpp"

namespace lf {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& o) const;

    /// Gram matrix of the rows: this * this^T.
    IntMatrix gram() const;

    void append_rows(const IntMatrix& o);
    IntMatrix scaled(const Int& s) const;

    /// Row Hermite normal form.  Zero rows are dropped; pivot entries are
    /// positive and entries above a pivot are reduced into [0, pivot).
    IntMatrix hnf() const;

    /// HNF of [this; other] stacked — the sum of the two row spaces.
    IntMatrix hnf_stack(const IntMatrix& o) const;

    /// Basis of the left integer kernel {x : x * this = 0}.
    IntMatrix kernel() const;

    /// Determinant by fraction-free Gaussian elimination (square input).
    Int det_bareiss() const;

    /// Elementary divisors d_1 | d_2 | ... (nonnegative, padded with zeros up
    /// to min(rows, cols)).  Smallest-nonzero-entry pivoting.
    std::vector<Int> smith_divisors() const;

    /// Solve X * this = s * I exactly; throws if this is singular or the
    /// solution is not integral.  (`this` must be square.)
    IntMatrix solve_left_scaled(const Int& s) const;

    /// Inverse as an exact rational matrix (numerators plus common denominator).
    void inverse_rational(IntMatrix& num, Int& den) const;

    /// True if every row of `o` lies in the row span (needs *this in HNF).
    bool hnf_contains_rows(const IntMatrix& o) const;
    bool hnf_contains(const std::vector<Int>& v) const;

   private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

}  // namespace lf

#endif
