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

#ifndef LATTICEFORGE_BINPOLY_HPP
#define LATTICEFORGE_BINPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lf {

/// Dense polynomial over GF(2), bit-packed, lowest degree first.
/// The zero polynomial has degree -1.
class BinPoly {
   public:
    BinPoly() = default;

    static BinPoly zero() { return BinPoly(); }
    static BinPoly one() { return monomial(0); }
    static BinPoly monomial(int d);

    /// Parse "1,1,0,1" (constant term first) = 1 + X + X^3.
    static BinPoly from_coeff_string(const std::string& s);
    std::string to_coeff_string() const;

    /// Low-degree-first list of coefficient bits, e.g. {1,1} = 1 + X.
    static BinPoly from_bits(const std::vector<int>& bits);

    int degree() const { return deg_; }
    bool is_zero() const { return deg_ < 0; }
    bool coeff(int i) const;
    void set_coeff(int i, bool v);

    bool operator==(const BinPoly& o) const;
    bool operator!=(const BinPoly& o) const { return !(*this == o); }
    bool operator<(const BinPoly& o) const;  // degree, then lexicographic; for canonical ordering

    BinPoly operator+(const BinPoly& o) const;
    BinPoly operator*(const BinPoly& o) const;

    /// Quotient and remainder; divisor must be nonzero.
    void divmod(const BinPoly& d, BinPoly& q, BinPoly& r) const;
    BinPoly mod(const BinPoly& d) const;
    bool divides(const BinPoly& f) const;

    static BinPoly gcd(BinPoly a, BinPoly b);
    /// g = gcd(a,b) together with u*a + v*b = g.
    static BinPoly egcd(const BinPoly& a, const BinPoly& b, BinPoly& u, BinPoly& v);

    /// X^n - 1 (== X^n + 1 over GF(2)).
    static BinPoly xn_minus_1(long n);

    std::string to_pretty_string() const;  // e.g. "X^3 + X + 1"

   private:
    void trim();
    std::vector<std::uint64_t> w_;
    int deg_ = -1;
};

}  // namespace lf

#endif
