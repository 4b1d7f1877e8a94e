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

#include "latticeforge/binpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lf {

namespace {
inline std::size_t words_for(int deg) { return deg < 0 ? 0 : static_cast<std::size_t>(deg) / 64 + 1; }
}  // namespace

void BinPoly::trim() {
    deg_ = -1;
    for (std::size_t wi = w_.size(); wi-- > 0;) {
        if (w_[wi] != 0) {
            deg_ = static_cast<int>(wi) * 64 + 63 - __builtin_clzll(w_[wi]);
            w_.resize(wi + 1);
            return;
        }
    }
    w_.clear();
}

BinPoly BinPoly::monomial(int d) {
    if (d < 0) throw std::invalid_argument("BinPoly::monomial: negative degree");
    BinPoly p;
    p.w_.assign(words_for(d), 0);
    p.w_[d / 64] = 1ull << (d % 64);
    p.deg_ = d;
    return p;
}

BinPoly BinPoly::from_coeff_string(const std::string& s) {
    BinPoly p;
    std::stringstream ss(s);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '\t'; }), tok.end());
        if (tok != "0" && tok != "1") throw std::invalid_argument("BinPoly: coefficient must be 0 or 1");
        if (tok == "1") p.set_coeff(i, true);
        ++i;
    }
    return p;
}

std::string BinPoly::to_coeff_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= deg_; ++i) {
        if (i) s += ",";
        s += coeff(i) ? "1" : "0";
    }
    return s;
}

BinPoly BinPoly::from_bits(const std::vector<int>& bits) {
    BinPoly p;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) p.set_coeff(static_cast<int>(i), true);
    return p;
}

bool BinPoly::coeff(int i) const {
    if (i < 0 || i > deg_) return false;
    return (w_[i / 64] >> (i % 64)) & 1;
}

void BinPoly::set_coeff(int i, bool v) {
    if (i < 0) throw std::invalid_argument("BinPoly::set_coeff: negative index");
    if (static_cast<std::size_t>(i / 64) >= w_.size()) w_.resize(i / 64 + 1, 0);
    if (v)
        w_[i / 64] |= 1ull << (i % 64);
    else
        w_[i / 64] &= ~(1ull << (i % 64));
    trim();
}

bool BinPoly::operator==(const BinPoly& o) const { return deg_ == o.deg_ && w_ == o.w_; }

bool BinPoly::operator<(const BinPoly& o) const {
    if (deg_ != o.deg_) return deg_ < o.deg_;
    for (std::size_t wi = w_.size(); wi-- > 0;)
        if (w_[wi] != o.w_[wi]) return w_[wi] < o.w_[wi];
    return false;
}

BinPoly BinPoly::operator+(const BinPoly& o) const {
    BinPoly r;
    r.w_.assign(std::max(w_.size(), o.w_.size()), 0);
    for (std::size_t i = 0; i < r.w_.size(); ++i) {
        std::uint64_t a = i < w_.size() ? w_[i] : 0;
        std::uint64_t b = i < o.w_.size() ? o.w_[i] : 0;
        r.w_[i] = a ^ b;
    }
    r.trim();
    return r;
}

BinPoly BinPoly::operator*(const BinPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    BinPoly r;
    r.w_.assign(words_for(deg_ + o.deg_), 0);
    for (int i = 0; i <= deg_; ++i) {
        if (!coeff(i)) continue;
        const int wshift = i / 64, bshift = i % 64;
        for (std::size_t j = 0; j < o.w_.size(); ++j) {
            r.w_[j + wshift] ^= o.w_[j] << bshift;
            if (bshift && j + wshift + 1 < r.w_.size()) r.w_[j + wshift + 1] ^= o.w_[j] >> (64 - bshift);
        }
    }
    r.trim();
    return r;
}

void BinPoly::divmod(const BinPoly& d, BinPoly& q, BinPoly& r) const {
    if (d.is_zero()) throw std::invalid_argument("BinPoly::divmod: division by zero");
    r = *this;
    q = zero();
    while (r.deg_ >= d.deg_) {
        int shift = r.deg_ - d.deg_;
        q.set_coeff(shift, true);
        r = r + d * monomial(shift);
    }
}

BinPoly BinPoly::mod(const BinPoly& d) const {
    BinPoly q, r;
    divmod(d, q, r);
    return r;
}

bool BinPoly::divides(const BinPoly& f) const {
    if (is_zero()) return f.is_zero();
    return f.mod(*this).is_zero();
}

BinPoly BinPoly::gcd(BinPoly a, BinPoly b) {
    while (!b.is_zero()) {
        BinPoly r = a.mod(b);
        a = b;
        b = r;
    }
    return a;
}

BinPoly BinPoly::egcd(const BinPoly& a, const BinPoly& b, BinPoly& u, BinPoly& v) {
    BinPoly r0 = a, r1 = b;
    BinPoly u0 = one(), u1 = zero();
    BinPoly v0 = zero(), v1 = one();
    while (!r1.is_zero()) {
        BinPoly q, r;
        r0.divmod(r1, q, r);
        r0 = r1;
        r1 = r;
        BinPoly ut = u0 + q * u1;
        u0 = u1;
        u1 = ut;
        BinPoly vt = v0 + q * v1;
        v0 = v1;
        v1 = vt;
    }
    u = u0;
    v = v0;
    return r0;
}

BinPoly BinPoly::xn_minus_1(long n) {
    if (n <= 0) throw std::invalid_argument("xn_minus_1: n must be positive");
    BinPoly p = monomial(static_cast<int>(n));
    p.set_coeff(0, true);
    return p;
}

std::string BinPoly::to_pretty_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = deg_; i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "X";
        else
            s += "X^" + std::to_string(i);
    }
    return s;
}

}  // namespace lf
