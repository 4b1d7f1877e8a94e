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

#include "latticeforge/cyclic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

namespace lf {

// ---------------------------------------------------------------- bit linear algebra

std::vector<long> f2_rref(std::vector<BitVec>& rows) {
    std::vector<long> pivots;
    if (rows.empty()) return pivots;
    const long n = rows[0].size();
    std::size_t r = 0;
    for (long col = 0; col < n && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(col)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(col)) rows[i].xor_inplace(rows[r]);
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

long f2_rank(std::vector<BitVec> rows) {
    f2_rref(rows);
    return static_cast<long>(rows.size());
}

bool f2_in_span(const std::vector<BitVec>& rref_rows, const std::vector<long>& pivots, BitVec v) {
    for (std::size_t i = 0; i < rref_rows.size(); ++i)
        if (v.get(pivots[i])) v.xor_inplace(rref_rows[i]);
    return v.is_zero();
}

F2Solution f2_solve(const std::vector<BitVec>& rows, const BitVec& v) {
    const long n = v.size();
    const long k = static_cast<long>(rows.size());
    std::vector<BitVec> work = rows;
    std::vector<BitVec> book(rows.size(), BitVec(k));
    for (long i = 0; i < k; ++i) book[i].set(i, true);
    BitVec target = v;
    BitVec tbook(k);
    std::size_t r = 0;
    for (long col = 0; col < n && r < work.size(); ++col) {
        std::size_t p = r;
        while (p < work.size() && !work[p].get(col)) ++p;
        if (p == work.size()) continue;
        std::swap(work[r], work[p]);
        std::swap(book[r], book[p]);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != r && work[i].get(col)) {
                work[i].xor_inplace(work[r]);
                book[i].xor_inplace(book[r]);
            }
        if (target.get(col)) {
            target.xor_inplace(work[r]);
            tbook.xor_inplace(book[r]);
        }
        ++r;
    }
    F2Solution sol;
    if (!target.is_zero()) return sol;
    sol.ok = true;
    sol.coeffs.assign(k, false);
    for (long i = 0; i < k; ++i) sol.coeffs[i] = tbook.get(i);
    return sol;
}

std::vector<BitVec> f2_nullspace(const std::vector<BitVec>& rows, long n) {
    std::vector<BitVec> rr = rows;
    std::vector<long> pivots = f2_rref(rr);
    std::vector<bool> is_pivot(n, false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<BitVec> out;
    for (long col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        BitVec v(n);
        v.set(col, true);
        for (std::size_t i = 0; i < rr.size(); ++i)
            if (rr[i].get(col)) v.set(pivots[i], true);
        out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------- field registry

std::shared_ptr<const GF2k> field_for_length(long n) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const GF2k>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const GF2k>(ord2_mod(n));
    cache[n] = f;
    return f;
}

// ---------------------------------------------------------------- CyclicCode

CyclicCode::CyclicCode(long n, std::vector<std::uint32_t> zeros, std::shared_ptr<const GF2k> field)
    : n_(n), zeros_(std::move(zeros)), field_(field ? std::move(field) : field_for_length(n)) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("CyclicCode: length must be odd and positive");
    if (field_->order() % n != 0) throw std::invalid_argument("CyclicCode: field does not contain the n-th roots");
    std::sort(zeros_.begin(), zeros_.end());
    zeros_.erase(std::unique(zeros_.begin(), zeros_.end()), zeros_.end());
    std::set<std::uint32_t> zs(zeros_.begin(), zeros_.end());
    for (auto u : zeros_) {
        if (u >= static_cast<std::uint32_t>(n)) throw std::invalid_argument("CyclicCode: zero exponent out of range");
        if (!zs.count(static_cast<std::uint32_t>((2ull * u) % n)))
            throw std::invalid_argument("CyclicCode: zero set not closed under doubling mod n");
    }
}

CyclicCode CyclicCode::universe(long n, std::shared_ptr<const GF2k> field) {
    return CyclicCode(n, {}, std::move(field));
}

CyclicCode CyclicCode::repetition(long n, std::shared_ptr<const GF2k> field) {
    std::vector<std::uint32_t> z(n - 1);
    for (long u = 1; u < n; ++u) z[u - 1] = static_cast<std::uint32_t>(u);
    return CyclicCode(n, std::move(z), std::move(field));
}

std::vector<std::uint32_t> CyclicCode::eigen_exponents() const {
    std::vector<std::uint32_t> out;
    std::size_t zi = 0;
    for (long u = 0; u < n_; ++u) {
        if (zi < zeros_.size() && zeros_[zi] == static_cast<std::uint32_t>(u)) {
            ++zi;
            continue;
        }
        out.push_back(static_cast<std::uint32_t>(u));
    }
    return out;
}

const BinPoly& CyclicCode::generator() const {
    if (!gen_) {
        BinPoly g = BinPoly::one();
        std::set<std::uint32_t> seen;
        for (auto u : zeros_) {
            if (seen.count(u)) continue;
            long v = u;
            do {
                seen.insert(static_cast<std::uint32_t>(v));
                v = (2 * v) % n_;
            } while (v != static_cast<long>(u));
            g = g * field_->min_poly_of_power(u, n_);
        }
        gen_ = g;
    }
    return *gen_;
}

bool CyclicCode::contains(const BitVec& word) const {
    if (word.size() != n_) throw std::invalid_argument("CyclicCode::contains: length mismatch");
    const long step = field_->order() / n_;
    for (auto u : zeros_) {
        std::uint32_t x = field_->pow_zeta(static_cast<long>(u) * step);
        std::uint32_t acc = 0;
        for (long i = n_ - 1; i >= 0; --i) {
            acc = field_->mul(acc, x);
            if (word.get(i)) acc ^= 1u;
        }
        if (acc != 0) return false;
    }
    return true;
}

std::vector<BitVec> CyclicCode::generator_rows() const {
    const BinPoly& g = generator();
    std::vector<BitVec> rows;
    const long k = dim();
    for (long i = 0; i < k; ++i) {
        BitVec r(n_);
        for (int j = 0; j <= g.degree(); ++j)
            if (g.coeff(j)) r.set(i + j, true);
        rows.push_back(std::move(r));
    }
    return rows;
}

long CyclicCode::bch_lower_bound() const {
    if (static_cast<long>(zeros_.size()) == n_) return n_ + 1;  // zero code, vacuous
    std::vector<bool> z(n_, false);
    for (auto u : zeros_) z[u] = true;
    long best = 0, cur = 0;
    for (long i = 0; i < 2 * n_; ++i) {
        if (z[i % n_]) {
            ++cur;
            best = std::max(best, std::min(cur, n_ - 1));
        } else
            cur = 0;
    }
    return best + 1;
}

CyclicCode CyclicCode::dual() const {
    std::vector<bool> z(n_, false);
    for (auto u : zeros_) z[u] = true;
    std::vector<std::uint32_t> dz;
    for (long u = 0; u < n_; ++u)
        if (!z[u]) dz.push_back(static_cast<std::uint32_t>((n_ - u) % n_));
    return CyclicCode(n_, std::move(dz), field_);
}

bool CyclicCode::is_subcode_of(const CyclicCode& o) const {
    if (n_ != o.n_) return false;
    return std::includes(zeros_.begin(), zeros_.end(), o.zeros_.begin(), o.zeros_.end());
}

// ---------------------------------------------------------------- ExtCyclicCode

ExtCyclicCode ExtCyclicCode::full_space(long n, std::shared_ptr<const GF2k> field) {
    ExtCyclicCode e(CyclicCode::universe(n, std::move(field)));
    e.full_ = true;
    return e;
}

bool ExtCyclicCode::contains(const BitVec& word) const {
    if (word.size() != length()) throw std::invalid_argument("ExtCyclicCode::contains: length mismatch");
    if (full_) return true;
    if (word.weight() % 2 != 0) return false;
    BitVec cyc(base_.n());
    for (long i = 0; i < base_.n(); ++i) cyc.set(i, word.get(i + 1));
    return base_.contains(cyc);
}

std::vector<BitVec> ExtCyclicCode::generator_rows() const {
    std::vector<BitVec> rows;
    if (full_) {
        for (long i = 0; i < length(); ++i) {
            BitVec r(length());
            r.set(i, true);
            rows.push_back(std::move(r));
        }
        return rows;
    }
    for (const BitVec& b : base_.generator_rows()) {
        BitVec r(length());
        long w = 0;
        for (long i = 0; i < base_.n(); ++i)
            if (b.get(i)) {
                r.set(i + 1, true);
                ++w;
            }
        r.set(0, w % 2 != 0);
        rows.push_back(std::move(r));
    }
    return rows;
}

long ExtCyclicCode::bch_lower_bound() const {
    if (full_) return 1;
    const long base = base_.bch_lower_bound();
    std::vector<bool> z(base_.n(), false);
    for (auto u : base_.zeros()) z[u] = true;
    long run1 = 0;
    for (long u = 1; u < base_.n() && z[u]; ++u) ++run1;
    long ext = (run1 >= 1) ? run1 + 2 : 1;
    return std::max(base, ext);
}

std::vector<BitVec> ExtCyclicCode::dual_basis() const { return f2_nullspace(generator_rows(), length()); }

// ---------------------------------------------------------------- minimum distance

long min_weight_exhaustive(const std::vector<BitVec>& rows) {
    std::vector<BitVec> basis = rows;
    f2_rref(basis);
    const long k = static_cast<long>(basis.size());
    if (k == 0) return 0;
    if (k > 30) throw std::invalid_argument("min_weight_exhaustive: dimension too large");
    BitVec w(basis[0].size());
    long best = basis[0].size() + 1;
    const unsigned long long total = 1ull << k;
    for (unsigned long long i = 1; i < total; ++i) {
        w.xor_inplace(basis[__builtin_ctzll(i)]);
        best = std::min(best, w.weight());
    }
    return best;
}

namespace {

DistanceResult min_distance_impl(const std::vector<BitVec>& rows, long certified_lower, bool even_weights,
                                 const MinDistBudget& budget) {
    DistanceResult res;
    std::vector<BitVec> basis = rows;
    f2_rref(basis);
    const long k = static_cast<long>(basis.size());
    if (k == 0) {
        res.lower = res.upper = 0;
        res.certified = true;
        return res;
    }
    long lower = std::max(certified_lower, 1L);
    if (even_weights && lower % 2 != 0) ++lower;
    if (k <= budget.enum_dim_cap) {
        long w = min_weight_exhaustive(basis);
        res.lower = res.upper = w;
        res.certified = true;
        return res;
    }
    std::mt19937_64 rng(budget.seed);
    long best = basis[0].size() + 1;
    for (const auto& b : basis) best = std::min(best, b.weight());
    BitVec w(basis[0].size());
    for (long s = 0; s < budget.samples; ++s) {
        std::size_t a = rng() % k, b = rng() % k, c = rng() % k;
        w = basis[a];
        w.xor_inplace(basis[b]);
        if (!w.is_zero()) best = std::min(best, w.weight());
        w.xor_inplace(basis[c]);
        if (!w.is_zero()) best = std::min(best, w.weight());
    }
    res.lower = lower;
    res.upper = best;
    res.certified = (lower == best);
    return res;
}

}  // namespace

DistanceResult exact_min_distance(const CyclicCode& c, const MinDistBudget& budget) {
    if (c.dim() == 0) return {0, 0, true};
    return min_distance_impl(c.generator_rows(), c.bch_lower_bound(), false, budget);
}

DistanceResult exact_min_distance(const ExtCyclicCode& c, const MinDistBudget& budget) {
    if (c.dim() == 0) return {0, 0, true};
    return min_distance_impl(c.generator_rows(), c.bch_lower_bound(), !c.is_full_space(), budget);
}

}  // namespace lf
