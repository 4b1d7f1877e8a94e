#include <doctest.h>

#include <algorithm>
#include <random>

#include "latticeforge/binpoly.hpp"
#include "latticeforge/gf2k.hpp"
#include "latticeforge/intmatrix.hpp"
#include "latticeforge/lll.hpp"
#include "latticeforge/numeric.hpp"
#include "latticeforge/zqpoly.hpp"

using namespace lf;

TEST_CASE("binpoly basics") {
    BinPoly p = BinPoly::from_coeff_string("1,1,0,1");  // 1 + X + X^3
    CHECK(p.degree() == 3);
    CHECK(p.coeff(0));
    CHECK(p.coeff(1));
    CHECK(!p.coeff(2));
    CHECK(p.to_coeff_string() == "1,1,0,1");
    BinPoly q = BinPoly::from_bits({1, 1});  // 1 + X
    BinPoly prod = p * q;
    CHECK(prod == BinPoly::from_bits({1, 0, 1, 1, 1}));
    BinPoly quo, rem;
    prod.divmod(q, quo, rem);
    CHECK(rem.is_zero());
    CHECK(quo == p);
}

TEST_CASE("factor_xn_minus_1 small cases") {
    // n = 3: cyclotomic cosets {0}, {1,2}
    auto f3 = factor_xn_minus_1(3);
    REQUIRE(f3.size() == 2);
    CHECK(f3[0] == BinPoly::from_bits({1, 1}));
    CHECK(f3[1] == BinPoly::from_bits({1, 1, 1}));

    // n = 7: X+1, X^3+X+1, X^3+X^2+1 — verified by multiplying back
    auto f7 = factor_xn_minus_1(7);
    REQUIRE(f7.size() == 3);
    BinPoly prod = BinPoly::one();
    for (const auto& f : f7) prod = prod * f;
    CHECK(prod == BinPoly::xn_minus_1(7));
    std::vector<BinPoly> expect{BinPoly::from_bits({1, 1}), BinPoly::from_bits({1, 1, 0, 1}),
                                BinPoly::from_bits({1, 0, 1, 1})};
    std::sort(expect.begin(), expect.end());
    CHECK(f7 == expect);

    // n = 15: factor degrees are the cyclotomic coset sizes 1,2,4,4,4
    auto f15 = factor_xn_minus_1(15);
    std::vector<int> degs;
    for (const auto& f : f15) degs.push_back(f.degree());
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 2, 4, 4, 4});

    CHECK_THROWS(factor_xn_minus_1(6));
}

TEST_CASE("factorization product identity for the paper lengths") {
    for (long n : {3L, 15L, 63L, 255L}) {
        auto fs = factor_xn_minus_1(n);
        BinPoly prod = BinPoly::one();
        for (const auto& f : fs) prod = prod * f;
        CHECK(prod == BinPoly::xn_minus_1(n));
    }
}

TEST_CASE("min_poly_of_power examples") {
    GF2k F(4);  // X^4 + X + 1
    CHECK(F.min_poly_of_power(0, 15) == BinPoly::from_bits({1, 1}));
    // coset {5,10}: (X - z^5)(X - z^10) = X^2 + X + 1
    CHECK(F.min_poly_of_power(5, 15) == BinPoly::from_bits({1, 1, 1}));
    // zeta itself is a root of the defining polynomial
    CHECK(F.min_poly_of_power(1, 15) == BinPoly::from_bits({1, 1, 0, 0, 1}));
}

TEST_CASE("embedded primitive polynomials are primitive") {
    for (int k = 1; k <= 12; ++k) CHECK_NOTHROW(GF2k{k});
    for (int k : {4, 6, 8}) {
        GF2k alt(k, GF2k::alternate_primitive_poly(k));
        CHECK(alt.modulus_bits() != GF2k::canonical_primitive_poly(k));
    }
    CHECK_THROWS(GF2k(4, 0b11111));  // X^4+X^3+X^2+X+1 divides X^5-1: order 5, not primitive
}

TEST_CASE("hensel lift examples") {
    // X+1 over n=3, m=2 lifts to X+3 = X-1
    ZqPoly l1 = hensel_lift(BinPoly::from_bits({1, 1}), 3, 2);
    CHECK(l1 == ZqPoly(2, {3, 1}));

    // m=1 is the identity
    BinPoly f = BinPoly::from_bits({1, 1, 0, 1});
    CHECK(hensel_lift(f, 7, 1) == ZqPoly::from_binary(f, 1));

    // product of all lifted factors of X^7-1 equals X^7-1 over Z/4
    auto f7 = factor_xn_minus_1(7);
    ZqPoly prod(2);
    prod.set_coeff(0, 1);
    for (const auto& fi : f7) prod = prod * hensel_lift(fi, 7, 2);
    CHECK(prod == ZqPoly::xn_minus_1(7, 2));

    CHECK_THROWS(hensel_lift(BinPoly::from_bits({1, 1, 1}), 7, 2));  // X^2+X+1 does not divide X^7-1
}

TEST_CASE("hensel lifting is multiplicative for all paper lengths") {
    for (long n : {3L, 15L, 63L, 255L}) {
        for (int m = 2; m <= 4; ++m) {
            auto fs = factor_xn_minus_1(n);
            ZqPoly prod(m);
            prod.set_coeff(0, 1);
            for (const auto& fi : fs) prod = prod * hensel_lift(fi, n, m);
            CHECK(prod == ZqPoly::xn_minus_1(n, m));
        }
    }
}

namespace {
IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}
}  // namespace

TEST_CASE("smith normal form") {
    auto d1 = from_rows({{2, 0}, {0, 4}}).smith_divisors();
    CHECK(d1 == std::vector<Int>{2, 4});
    auto d2 = from_rows({{2, 0}, {1, 2}}).smith_divisors();
    CHECK(d2 == std::vector<Int>{1, 4});
    auto d3 = IntMatrix::identity(5).smith_divisors();
    CHECK(d3 == std::vector<Int>(5, Int(1)));
    auto d4 = IntMatrix(3, 3).smith_divisors();
    CHECK(d4 == std::vector<Int>(3, Int(0)));
}

TEST_CASE("smith divisors invariant under random unimodular operations") {
    std::mt19937 rng(20260809);
    IntMatrix m = from_rows({{6, 4, 0, 2}, {0, 8, 2, 4}, {2, 2, 2, 0}, {0, 0, 4, 8}});
    auto base = m.smith_divisors();
    for (int trial = 0; trial < 24; ++trial) {
        IntMatrix t = m;
        for (int op = 0; op < 12; ++op) {
            std::size_t a = rng() % 4, b = rng() % 4;
            long f = static_cast<long>(rng() % 5) - 2;
            if (a == b) continue;
            if (rng() & 1)
                for (std::size_t j = 0; j < 4; ++j) t.at(a, j) += f * t.at(b, j);
            else
                for (std::size_t i = 0; i < 4; ++i) t.at(i, a) += f * t.at(i, b);
        }
        CHECK(t.smith_divisors() == base);
    }
}

TEST_CASE("hnf, kernel, determinant") {
    IntMatrix m = from_rows({{2, 0}, {1, 2}});
    CHECK(m.det_bareiss() == 4);
    IntMatrix h = m.hnf();
    CHECK(h.at(0, 0) == 1);  // gcd of column
    CHECK(h.hnf_contains_rows(from_rows({{1, 0}})) == false);
    CHECK(h.hnf_contains_rows(from_rows({{1, 2}, {2, 0}, {0, 4}})));

    IntMatrix src = from_rows({{1, 2}, {2, 4}, {0, 1}});
    IntMatrix k = src.kernel();
    REQUIRE(k.rows() == 1);
    IntMatrix z = k.mul(src);
    for (std::size_t j = 0; j < z.cols(); ++j) CHECK(z.at(0, j) == 0);
    CHECK(k.at(0, 2) == 0);
}

TEST_CASE("lll preserves the lattice and reduces") {
    IntMatrix b = from_rows({{1, 0, 0, 1345}, {0, 1, 0, 35}, {0, 0, 1, 154}, {0, 0, 0, 1500}});
    IntMatrix orig = b;
    IntMatrix u;
    lll_reduce(b, 99, 100, false, &u);
    CHECK((u.det_bareiss() == 1 || u.det_bareiss() == -1));
    CHECK(u.mul(orig) == b);
    // reduced vectors are shorter than the worst original row
    Int norm0 = 0;
    for (std::size_t j = 0; j < 4; ++j) norm0 += b.at(0, j) * b.at(0, j);
    CHECK(norm0 < 1345 * 1345);

    // an orthogonal basis is already reduced (up to sign/order)
    IntMatrix o = from_rows({{3, 0}, {0, 2}});
    lll_reduce(o);
    CHECK(((o.at(0, 0) == 0 && o.at(1, 1) == 0) || (o.at(0, 1) == 0 && o.at(1, 0) == 0)));

    IntMatrix bad = from_rows({{1, 2}, {2, 4}});
    CHECK_THROWS(lll_reduce(bad));
}

TEST_CASE("rounding of hermite values") {
    // BW_4: min 4, det 2^8, N=16 -> 4/2^(1/2) = 2.8284... -> 2.83
    auto r = round_hermite_2dp(Rat(4), 8, 16);
    CHECK(!r.tie);
    CHECK(format_2dp(r.hundredths) == "2.83");
    auto r2 = round_hermite_2dp(Rat(4), 12, 16);
    CHECK(format_2dp(r2.hundredths) == "2.38");
    auto r3 = round_hermite_2dp(Rat(6), 20, 16);
    CHECK(format_2dp(r3.hundredths) == "2.52");
    // exact case: min 3, det 2^0 -> 3.00
    auto r4 = round_hermite_2dp(Rat(3), 0, 8);
    CHECK(format_2dp(r4.hundredths) == "3.00");
}

TEST_CASE("log2_exact") {
    CHECK(log2_exact(Rat(8)) == 3);
    CHECK(log2_exact(pow2q(-5)) == -5);
    CHECK_THROWS(log2_exact(Rat(3)));
}
