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

#include "latticeforge/gf2k.hpp"

#include <algorithm>
#include <stdexcept>

namespace lf {

std::uint32_t GF2k::canonical_primitive_poly(int k) {
    // Classic primitive polynomials (maximal-length LFSR table).  Each entry
    // is verified primitive when the field is built.
    switch (k) {
        case 1: return 0b11;                 // X + 1
        case 2: return 0b111;                // X^2 + X + 1
        case 3: return 0b1011;               // X^3 + X + 1
        case 4: return 0b10011;              // X^4 + X + 1
        case 5: return 0b100101;             // X^5 + X^2 + 1
        case 6: return 0b1000011;            // X^6 + X + 1
        case 7: return 0b10001001;           // X^7 + X^3 + 1
        case 8: return 0b100011101;          // X^8 + X^4 + X^3 + X^2 + 1
        case 9: return 0b1000010001;         // X^9 + X^4 + 1
        case 10: return 0b10000001001;       // X^10 + X^3 + 1
        case 11: return 0b100000000101;      // X^11 + X^2 + 1
        case 12: return 0b1000001010011;     // X^12 + X^6 + X^4 + X + 1
        default: throw std::invalid_argument("no embedded primitive polynomial for this degree");
    }
}

std::uint32_t GF2k::alternate_primitive_poly(int k) {
    switch (k) {
        case 4: return 0b11001;        // X^4 + X^3 + 1
        case 6: return 0b1100001;      // X^6 + X^5 + 1
        case 8: return 0b101110001;    // X^8 + X^6 + X^5 + X^4 + 1
        default: throw std::invalid_argument("no alternate primitive polynomial for this degree");
    }
}

GF2k::GF2k(int k) : GF2k(k, canonical_primitive_poly(k)) {}

GF2k::GF2k(int k, std::uint32_t poly_bits) : k_(k), poly_(poly_bits) {
    if (k < 1 || k > 16) throw std::invalid_argument("GF2k: degree out of range");
    if ((poly_bits >> k) != 1u) throw std::invalid_argument("GF2k: modulus degree mismatch");
    order_ = (1u << k) - 1;
    build_tables();
}

void GF2k::build_tables() {
    exp_.assign(2 * order_, 0);
    log_.assign(order_ + 1, -1);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
        if (log_[x] != -1) throw std::invalid_argument("GF2k: modulus is not primitive");
        exp_[i] = x;
        log_[x] = static_cast<std::int32_t>(i);
        x <<= 1;
        if (x >> k_) x ^= poly_;
    }
    if (x != 1) throw std::invalid_argument("GF2k: modulus is not primitive");
    for (std::uint32_t i = 0; i < order_; ++i) exp_[order_ + i] = exp_[i];
}

std::uint32_t GF2k::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("GF2k::inv(0)");
    return exp_[order_ - log_[a]];
}

std::uint32_t GF2k::pow_zeta(long e) const {
    long r = e % static_cast<long>(order_);
    if (r < 0) r += order_;
    return exp_[r];
}

int GF2k::log(std::uint32_t a) const {
    if (a == 0 || a > order_) throw std::domain_error("GF2k::log: not a unit");
    return log_[a];
}

std::uint32_t GF2k::eval(const BinPoly& p, std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (int i = p.degree(); i >= 0; --i) {
        acc = mul(acc, x);
        if (p.coeff(i)) acc ^= 1u;
    }
    return acc;
}

BinPoly GF2k::min_poly_of_power(long u, long n) const {
    if (n <= 0 || order_ % n != 0) throw std::invalid_argument("min_poly_of_power: n must divide 2^k - 1");
    long uu = u % n;
    if (uu < 0) uu += n;
    const long step = order_ / n;
    // Coset of uu under doubling mod n.
    std::vector<long> coset;
    long v = uu;
    do {
        coset.push_back(v);
        v = (2 * v) % n;
    } while (v != uu);
    // prod (X - beta^v) expanded with field coefficients.
    std::vector<std::uint32_t> c{1};
    for (long e : coset) {
        std::uint32_t root = pow_zeta(e * step);
        std::vector<std::uint32_t> nc(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] ^= c[i];
            nc[i] ^= mul(c[i], root);
        }
        c = std::move(nc);
    }
    BinPoly p;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0 && c[i] != 1) throw std::logic_error("min_poly_of_power: coefficients not in GF(2)");
        if (c[i] == 1) p.set_coeff(static_cast<int>(i), true);
    }
    return p;
}

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(long n) {
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::uint32_t>> out;
    for (long u = 0; u < n; ++u) {
        if (seen[u]) continue;
        std::vector<std::uint32_t> coset;
        long v = u;
        do {
            seen[v] = true;
            coset.push_back(static_cast<std::uint32_t>(v));
            v = (2 * v) % n;
        } while (v != u);
        std::sort(coset.begin(), coset.end());
        out.push_back(std::move(coset));
    }
    return out;
}

int ord2_mod(long n) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("ord2_mod: n must be odd and positive");
    if (n == 1) return 1;
    long x = 2 % n;
    int e = 1;
    while (x != 1) {
        x = (x * 2) % n;
        ++e;
        if (e > 64) throw std::logic_error("ord2_mod: runaway");
    }
    return e;
}

}  // namespace lf
