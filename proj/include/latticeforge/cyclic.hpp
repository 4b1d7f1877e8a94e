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

#ifndef LATTICEFORGE_CYCLIC_HPP
#define LATTICEFORGE_CYCLIC_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latticeforge/binpoly.hpp"
#include "latticeforge/bitvec.hpp"
#include "latticeforge/gf2k.hpp"

namespace lf {

/// Shared field context for codes of length n (2^ord - 1 style lengths give
/// the splitting field of X^n - 1).  Memoized per n.
std::shared_ptr<const GF2k> field_for_length(long n);

/// Binary cyclic code of odd length n, stored by its zero set: the exponents
/// u with c(zeta^u) = 0 for all codewords.  The set must be closed under
/// doubling mod n.  Words are coefficient vectors, coordinate i = degree i.
class CyclicCode {
   public:
    CyclicCode(long n, std::vector<std::uint32_t> zeros, std::shared_ptr<const GF2k> field = nullptr);

    static CyclicCode universe(long n, std::shared_ptr<const GF2k> field = nullptr);
    static CyclicCode repetition(long n, std::shared_ptr<const GF2k> field = nullptr);

    long n() const { return n_; }
    long dim() const { return n_ - static_cast<long>(zeros_.size()); }
    const std::vector<std::uint32_t>& zeros() const { return zeros_; }
    /// Exponents of the sigma eigenvalues carried by the code: complement of
    /// the zero set.
    std::vector<std::uint32_t> eigen_exponents() const;

    const GF2k& field() const { return *field_; }
    std::shared_ptr<const GF2k> field_ptr() const { return field_; }

    /// Generator polynomial: product of the minimal polynomials of the zero
    /// cosets (computed lazily, cached).
    const BinPoly& generator() const;

    bool contains(const BitVec& word) const;
    std::vector<BitVec> generator_rows() const;

    /// BCH bound: longest cyclic run of consecutive zero exponents plus one.
    long bch_lower_bound() const;

    /// Zero set of the dual: { n-u mod n : u not in zeros }.
    CyclicCode dual() const;

    bool is_subcode_of(const CyclicCode& o) const;
    bool operator==(const CyclicCode& o) const { return n_ == o.n_ && zeros_ == o.zeros_; }

   private:
    long n_;
    std::vector<std::uint32_t> zeros_;
    std::shared_ptr<const GF2k> field_;
    mutable std::optional<BinPoly> gen_;
};

/// Extended cyclic code: coordinate 0 carries the overall parity, coordinates
/// 1..n carry the cyclic word (degree i at coordinate i+1).  sigma fixes
/// coordinate 0.  A separate flag models the full space GF(2)^(n+1), which is
/// not an extended cyclic code.
class ExtCyclicCode {
   public:
    explicit ExtCyclicCode(CyclicCode base) : base_(std::move(base)) {}
    static ExtCyclicCode full_space(long n, std::shared_ptr<const GF2k> field = nullptr);

    const CyclicCode& base() const { return base_; }
    bool is_full_space() const { return full_; }
    long length() const { return base_.n() + 1; }
    long dim() const { return full_ ? length() : base_.dim(); }

    bool contains(const BitVec& word) const;
    std::vector<BitVec> generator_rows() const;

    /// Extension-aware BCH bound: base bound, improved by one when the zero
    /// run starts at exponent 1 (the parity argument applies).
    long bch_lower_bound() const;

    /// Dual computed by GF(2) linear algebra (no cyclic structure assumed).
    std::vector<BitVec> dual_basis() const;

    bool operator==(const ExtCyclicCode& o) const { return full_ == o.full_ && base_ == o.base_; }

   private:
    CyclicCode base_;
    bool full_ = false;
};

struct DistanceResult {
    long lower = 0;        // certified lower bound
    long upper = -1;       // best weight found (-1: none)
    bool certified = false;  // lower == true minimum
};

struct MinDistBudget {
    int enum_dim_cap = 26;   // exhaustive enumeration up to this dimension
    long samples = 20000;    // information-set style samples otherwise
    unsigned seed = 1;
};

/// Exact minimum distance by exhaustive enumeration when the dimension fits
/// the budget; otherwise the BCH-certified lower bound plus a sampled upper
/// bound (certified only when they meet).
DistanceResult exact_min_distance(const CyclicCode& c, const MinDistBudget& budget = {});
DistanceResult exact_min_distance(const ExtCyclicCode& c, const MinDistBudget& budget = {});

/// Shared worker: minimum weight of the row span (exhaustive, Gray code).
long min_weight_exhaustive(const std::vector<BitVec>& rows);

}  // namespace lf

#endif
