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

#ifndef LATTICEFORGE_LLL_HPP
#define LATTICEFORGE_LLL_HPP

#include <vector>

#include "latticeforge/intmatrix.hpp"

namespace lf {

/// Fraction-free Gram-Schmidt data of a positive-definite integer Gram
/// matrix: d[0] = 1, d[i+1] = det of the leading (i+1)x(i+1) minor,
/// mu_{i,j} = lambda(i,j)/d[j+1], |b*_i|^2 = d[i+1]/d[i].
struct GSData {
    std::vector<Int> d;
    IntMatrix lambda;  // strictly lower triangular part used
};

/// Throws std::domain_error when the Gram matrix is not positive definite
/// (rank-deficient basis).
GSData integer_gs(const IntMatrix& gram);

/// Exact integer LLL on the rows of `basis` (delta = delta_num/delta_den).
/// The inner product is the plain integer dot product of coordinate rows;
/// any global scale on the Gram leaves the reduction unchanged.
/// When `transform` is non-null it receives the applied unimodular map U
/// with U * original = reduced.  `deep` enables deep-insertion passes.
void lll_reduce(IntMatrix& basis, long delta_num = 99, long delta_den = 100, bool deep = false,
                IntMatrix* transform = nullptr);

}  // namespace lf

#endif
