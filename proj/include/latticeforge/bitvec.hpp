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

#ifndef LATTICEFORGE_BITVEC_HPP
#define LATTICEFORGE_BITVEC_HPP

#include <cstdint>
#include <vector>

namespace lf {

/// Fixed-length bit vector (a word over GF(2)).
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(long n) : n_(n), w_((n + 63) / 64, 0) {}

    long size() const { return n_; }
    bool get(long i) const { return (w_[i / 64] >> (i % 64)) & 1; }
    void set(long i, bool v) {
        if (v)
            w_[i / 64] |= 1ull << (i % 64);
        else
            w_[i / 64] &= ~(1ull << (i % 64));
    }
    void flip(long i) { w_[i / 64] ^= 1ull << (i % 64); }

    void xor_inplace(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    void and_inplace(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    }

    long weight() const {
        long c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool is_zero() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    long lowest_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<long>(k) * 64 + __builtin_ctzll(w_[k]);
        return -1;
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const BitVec& o) const { return w_ < o.w_; }

   private:
    long n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// In-place reduced row echelon form; returns pivot columns.  Zero rows are
/// removed.
std::vector<long> f2_rref(std::vector<BitVec>& rows);

/// Rank of a copy.
long f2_rank(std::vector<BitVec> rows);

/// Is v in the span of (already rref-ed) rows with the given pivots?
bool f2_in_span(const std::vector<BitVec>& rref_rows, const std::vector<long>& pivots, BitVec v);

/// Solve x * rows = v in GF(2); empty optional when unsolvable.
/// `rows` need not be in echelon form.
struct F2Solution {
    bool ok = false;
    std::vector<bool> coeffs;
};
F2Solution f2_solve(const std::vector<BitVec>& rows, const BitVec& v);

/// Basis of the dual (orthogonal complement) of the row space in GF(2)^n.
std::vector<BitVec> f2_nullspace(const std::vector<BitVec>& rows, long n);

}  // namespace lf

#endif
