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

#include "latticeforge/zqpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "latticeforge/gf2k.hpp"

namespace lf {

ZqPoly::ZqPoly(int e, std::vector<std::uint64_t> coeffs) : e_(e), c_(std::move(coeffs)) {
    if (e < 1 || e > 62) throw std::invalid_argument("ZqPoly: exponent out of range");
    for (auto& x : c_) x &= mask();
    trim();
}

ZqPoly ZqPoly::from_binary(const BinPoly& p, int e) {
    ZqPoly z(e);
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i)) z.set_coeff(i, 1);
    return z;
}

ZqPoly ZqPoly::xn_minus_1(long n, int e) {
    ZqPoly z(e);
    z.set_coeff(static_cast<int>(n), 1);
    z.set_coeff(0, (z.mask()) & (~0ull));  // -1 mod 2^e
    return z;
}

void ZqPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int ZqPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

bool ZqPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

std::uint64_t ZqPoly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return 0;
    return c_[i];
}

void ZqPoly::set_coeff(int i, std::uint64_t v) {
    if (i < 0) throw std::invalid_argument("ZqPoly::set_coeff");
    if (static_cast<std::size_t>(i) >= c_.size()) c_.resize(i + 1, 0);
    c_[i] = v & mask();
    trim();
}

bool ZqPoly::operator==(const ZqPoly& o) const { return e_ == o.e_ && c_ == o.c_; }

ZqPoly ZqPoly::operator+(const ZqPoly& o) const {
    ZqPoly r(e_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i))) & mask();
    r.trim();
    return r;
}

ZqPoly ZqPoly::operator-(const ZqPoly& o) const {
    ZqPoly r(e_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = (coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i))) & mask();
    r.trim();
    return r;
}

ZqPoly ZqPoly::operator*(const ZqPoly& o) const {
    if (c_.empty() || o.c_.empty()) return ZqPoly(e_);
    ZqPoly r(e_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = (r.c_[i + j] + c_[i] * o.c_[j]) & mask();
    }
    r.trim();
    return r;
}

namespace {
std::uint64_t inv_odd(std::uint64_t a, std::uint64_t msk) {
    // Newton iteration for the inverse of an odd residue mod 2^e.
    std::uint64_t x = 1;
    for (int i = 0; i < 6; ++i) x = (x * (2 - a * x)) & msk;
    return x & msk;
}
}  // namespace

void ZqPoly::divmod(const ZqPoly& d, ZqPoly& q, ZqPoly& r) const {
    if (d.is_zero()) throw std::invalid_argument("ZqPoly::divmod: division by zero");
    if ((d.c_.back() & 1) == 0) throw std::invalid_argument("ZqPoly::divmod: leading coefficient not a unit");
    const std::uint64_t lead_inv = inv_odd(d.c_.back(), mask());
    q = ZqPoly(e_);
    r = *this;
    while (r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        std::uint64_t f = (r.c_.back() * lead_inv) & mask();
        q.set_coeff(shift, f);
        for (int i = 0; i <= d.degree(); ++i)
            r.c_[i + shift] = (r.c_[i + shift] - f * d.c_[i]) & mask();
        r.trim();
    }
}

ZqPoly ZqPoly::mod(const ZqPoly& d) const {
    ZqPoly q, r;
    divmod(d, q, r);
    return r;
}

bool ZqPoly::divides(const ZqPoly& f) const { return f.mod(*this).is_zero(); }

ZqPoly ZqPoly::reduced_to(int new_e) const {
    if (new_e > e_) throw std::invalid_argument("ZqPoly::reduced_to: cannot raise modulus");
    ZqPoly r(new_e);
    for (int i = 0; i <= degree(); ++i) r.set_coeff(i, c_[i]);
    return r;
}

BinPoly ZqPoly::mod2() const {
    BinPoly p;
    for (int i = 0; i <= degree(); ++i)
        if (c_[i] & 1) p.set_coeff(i, true);
    return p;
}

std::string ZqPoly::to_coeff_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s;
}

std::vector<BinPoly> factor_xn_minus_1(long n) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("factor_xn_minus_1: n must be odd");
    const int k = ord2_mod(n);
    GF2k F(k);
    std::vector<BinPoly> factors;
    for (const auto& coset : cyclotomic_cosets(n)) factors.push_back(F.min_poly_of_power(coset[0], n));
    std::sort(factors.begin(), factors.end());
    return factors;
}

ZqPoly hensel_lift(const BinPoly& f, long n, int m) {
    if (n % 2 == 0) throw std::invalid_argument("hensel_lift: n must be odd");
    if (f.is_zero() || !f.coeff(f.degree())) throw std::invalid_argument("hensel_lift: f must be monic");
    const BinPoly xn1 = BinPoly::xn_minus_1(n);
    if (!f.divides(xn1)) throw std::invalid_argument("hensel_lift: f does not divide X^n - 1");
    if (m == 1) return ZqPoly::from_binary(f, 1);
    if (m > 30) throw std::invalid_argument("hensel_lift: exponent too large");

    BinPoly g0;
    {
        BinPoly q, r;
        xn1.divmod(f, q, r);
        g0 = q;
    }
    // Bezout over GF(2): sg * g + sh * f = 1 (X^n - 1 is squarefree for odd n).
    BinPoly sg, sh;
    BinPoly d = BinPoly::egcd(g0, f, sg, sh);
    if (!(d == BinPoly::one())) throw std::logic_error("hensel_lift: factors not coprime");

    // Quadratic Hensel iteration (lift the pair (g, h), h the monic target).
    int cur = 1;
    ZqPoly g = ZqPoly::from_binary(g0, 1);
    ZqPoly h = ZqPoly::from_binary(f, 1);
    ZqPoly s = ZqPoly::from_binary(sg, 1);
    ZqPoly t = ZqPoly::from_binary(sh, 1);
    while (cur < m) {
        int nxt = std::min(2 * cur, m);
        int work = nxt;  // all arithmetic below happens mod 2^nxt
        auto up = [&](const ZqPoly& p) {
            ZqPoly r(work);
            for (int i = 0; i <= p.degree(); ++i) r.set_coeff(i, p.coeff(i));
            return r;
        };
        ZqPoly G = up(g), H = up(h), S = up(s), T = up(t);
        ZqPoly fful = ZqPoly::xn_minus_1(n, work);
        ZqPoly e = fful - G * H;
        ZqPoly q, r;
        (S * e).divmod(H, q, r);
        ZqPoly Gs = G + T * e + q * G;
        ZqPoly Hs = H + r;
        ZqPoly one(work);
        one.set_coeff(0, 1);
        ZqPoly b = S * Gs + T * Hs - one;
        ZqPoly c, dd;
        (S * b).divmod(Hs, c, dd);
        ZqPoly Ss = S - dd;
        ZqPoly Ts = T - T * b - c * Gs;
        g = Gs;
        h = Hs;
        s = Ss;
        t = Ts;
        cur = nxt;
    }
    ZqPoly lifted = h.reduced_to(m);
    if (!lifted.is_monic()) throw std::logic_error("hensel_lift: lift not monic");
    if (!lifted.divides(ZqPoly::xn_minus_1(n, m))) throw std::logic_error("hensel_lift: lift does not divide X^n - 1");
    if (!(lifted.mod2() == f)) throw std::logic_error("hensel_lift: lift does not reduce to f");
    return lifted;
}

}  // namespace lf
