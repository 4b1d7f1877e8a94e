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

#ifndef LATTICEFORGE_GF2K_HPP
#define LATTICEFORGE_GF2K_HPP

#include <cstdint>
#include <vector>

#include "latticeforge/binpoly.hpp"

namespace lf {

/// GF(2^k) as GF(2)[X]/(pi) for a primitive pi, with full log/antilog tables.
/// Elements are coefficient bit masks; zeta = class of X generates the
/// multiplicative group.  k <= 16.
class GF2k {
   public:
    /// Canonical field: uses the embedded primitive polynomial for degree k.
    explicit GF2k(int k);
    /// Custom modulus, given as a bit mask including the top bit
    /// (e.g. 0b10011 = X^4 + X + 1).  Throws unless the polynomial is
    /// primitive of degree k.
    GF2k(int k, std::uint32_t poly_bits);

    int k() const { return k_; }
    std::uint32_t order() const { return order_; }  // 2^k - 1
    std::uint32_t modulus_bits() const { return poly_; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow_zeta(long e) const;  // zeta^e, e arbitrary
    int log(std::uint32_t a) const;        // discrete log base zeta, a != 0

    /// Evaluate a GF(2) polynomial at a field element.
    std::uint32_t eval(const BinPoly& p, std::uint32_t x) const;

    /// Minimal polynomial over GF(2) of beta^u, where beta = zeta^(order/n) is
    /// the canonical primitive n-th root of unity.  Requires n | order.
    BinPoly min_poly_of_power(long u, long n) const;

    /// Embedded table entry (primitive, machine-verified at construction).
    static std::uint32_t canonical_primitive_poly(int k);
    /// A second, distinct primitive polynomial where one is embedded
    /// (used by the choice-independence checks).
    static std::uint32_t alternate_primitive_poly(int k);

   private:
    void build_tables();
    int k_;
    std::uint32_t order_;
    std::uint32_t poly_;
    std::vector<std::uint32_t> exp_;  // size 2*order, exp_[i] = zeta^i
    std::vector<std::int32_t> log_;
};

/// Partition of [0, n) into 2-cyclotomic cosets u -> 2u mod n.
/// Each coset is sorted; cosets ordered by least element.
std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(long n);

/// Multiplicative order of 2 modulo odd n.
int ord2_mod(long n);

}  // namespace lf

#endif
