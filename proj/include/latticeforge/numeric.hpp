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

#ifndef LATTICEFORGE_NUMERIC_HPP
#define LATTICEFORGE_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lf {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow2(long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    Int r = 1;
    r <<= static_cast<unsigned long>(e);
    return r;
}

/// 2^e as an exact rational, e may be negative.
inline Rat pow2q(long e) {
    if (e >= 0) return Rat(pow2(e));
    return Rat(1, pow2(-e));
}

inline int cmp_abs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline Int binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Exact 2-adic valuation; v(0) reported as `cap`.
inline int val2(unsigned long x, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while ((x & 1u) == 0) {
        x >>= 1;
        ++v;
    }
    return v;
}

/// log2 of a rational that is an exact power of two.
/// Throws if the value is not a 2-power.
inline long log2_exact(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    const Int num = r.get_num(), den = r.get_den();
    if (sgn(num) <= 0) throw std::domain_error("log2_exact: value not positive");
    auto is_pow2 = [](const Int& z) { return mpz_popcount(z.get_mpz_t()) == 1; };
    if (!is_pow2(num) || !is_pow2(den)) throw std::domain_error("log2_exact: not a power of two");
    return static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - 1 -
           (static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1);
}

struct Rounded2dp {
    long hundredths;  // round(100 * value)
    bool tie;         // true when the value is exactly halfway (flagged, never absorbed)
};

/// Round min * 2^(-det_log2 / N) to two decimals with integer arithmetic only.
/// Works for any positive rational `min` and integer det_log2 (the determinants
/// in this project are exact 2-powers).
Rounded2dp round_hermite_2dp(const Rat& min, long det_log2, long N);

inline std::string format_2dp(long hundredths) {
    std::string s = std::to_string(hundredths / 100) + ".";
    long f = hundredths % 100;
    if (f < 10) s += "0";
    return s + std::to_string(f);
}

}  // namespace lf

#endif
