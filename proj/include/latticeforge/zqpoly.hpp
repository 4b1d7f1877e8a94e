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

#ifndef LATTICEFORGE_ZQPOLY_HPP
#define LATTICEFORGE_ZQPOLY_HPP

#include <cstdint>
#include <vector>

#include "latticeforge/binpoly.hpp"

namespace lf {

/// Dense polynomial over Z/2^e, lowest degree first, coefficients in [0, 2^e).
class ZqPoly {
   public:
    ZqPoly() : e_(1) {}
    explicit ZqPoly(int e) : e_(e) {}
    ZqPoly(int e, std::vector<std::uint64_t> coeffs);

    static ZqPoly from_binary(const BinPoly& p, int e);
    static ZqPoly xn_minus_1(long n, int e);

    int modulus_exponent() const { return e_; }
    std::uint64_t modulus() const { return 1ull << e_; }
    int degree() const;
    bool is_zero() const { return degree() < 0; }
    bool is_monic() const;
    std::uint64_t coeff(int i) const;
    void set_coeff(int i, std::uint64_t v);

    bool operator==(const ZqPoly& o) const;

    ZqPoly operator+(const ZqPoly& o) const;
    ZqPoly operator-(const ZqPoly& o) const;
    ZqPoly operator*(const ZqPoly& o) const;

    /// Division with remainder; divisor's leading coefficient must be a unit.
    void divmod(const ZqPoly& d, ZqPoly& q, ZqPoly& r) const;
    ZqPoly mod(const ZqPoly& d) const;
    bool divides(const ZqPoly& f) const;

    /// Reduce coefficients into Z/2^new_e (new_e <= current exponent).
    ZqPoly reduced_to(int new_e) const;
    BinPoly mod2() const;

    std::string to_coeff_string() const;

   private:
    void trim();
    std::uint64_t mask() const { return (e_ == 64) ? ~0ull : ((1ull << e_) - 1); }
    int e_;
    std::vector<std::uint64_t> c_;
};

/// Factor X^n - 1 over GF(2) into monic irreducibles (n odd).  Each factor is
/// the minimal polynomial of one cyclotomic coset; sorted canonically.
std::vector<BinPoly> factor_xn_minus_1(long n);

/// The unique monic lift of f over Z/2^m with lift | X^n - 1 and
/// lift == f (mod 2).  Requires f monic dividing X^n - 1 over GF(2), n odd.
ZqPoly hensel_lift(const BinPoly& f, long n, int m);

}  // namespace lf

#endif
