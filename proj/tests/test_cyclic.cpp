#include <doctest.h>

#include <algorithm>
#include <random>

#include "latticeforge/cyclic.hpp"

using namespace lf;

namespace {

// zero set of R(r,2m)* : exponents 0<u<4^m with wt2(u) <= 2m-1-r
std::vector<std::uint32_t> rm_star_zeros(int r, int mm) {
    const long n = (1L << mm) - 1;
    std::vector<std::uint32_t> z;
    for (long u = 1; u <= n; ++u)
        if (__builtin_popcountl(u) <= mm - 1 - r) z.push_back(static_cast<std::uint32_t>(u % n));
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    return z;
}

}  // namespace

TEST_CASE("code_from_zeros basics") {
    CyclicCode universe = CyclicCode::universe(15);
    CHECK(universe.dim() == 15);
    CHECK(universe.generator() == BinPoly::one());

    CyclicCode rep = CyclicCode::repetition(15);
    CHECK(rep.dim() == 1);
    // only the all-ones word survives
    BitVec ones(15);
    for (long i = 0; i < 15; ++i) ones.set(i, true);
    CHECK(rep.contains(ones));
    BitVec e0(15);
    e0.set(0, true);
    CHECK(!rep.contains(e0));

    // wt2 <= 2 zero set at n=15 gives the dim-5 punctured Reed-Muller code
    CyclicCode rm1(15, rm_star_zeros(1, 4));
    CHECK(rm1.zeros().size() == 10);
    CHECK(rm1.dim() == 5);
    CHECK(rm1.dim() == 15 - rm1.generator().degree());

    CHECK_THROWS(CyclicCode(15, {1}));  // not closed under doubling
    CHECK_THROWS(CyclicCode(14, {}));   // even length
}

TEST_CASE("triality: dimension from zero set equals n - deg(generator)") {
    std::mt19937 rng(7);
    for (long n : {15L, 63L}) {
        auto cosets = cyclotomic_cosets(n);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::uint32_t> zeros;
            for (const auto& cs : cosets)
                if (rng() & 1) zeros.insert(zeros.end(), cs.begin(), cs.end());
            CyclicCode c(n, zeros);
            CHECK(c.dim() == n - c.generator().degree());
            CHECK(c.generator().divides(BinPoly::xn_minus_1(n)));
            // every generator row is annihilated by the zero set
            for (const auto& row : c.generator_rows()) CHECK(c.contains(row));
        }
    }
}

TEST_CASE("bch bound examples") {
    CyclicCode rm1(15, rm_star_zeros(1, 4));
    CHECK(rm1.bch_lower_bound() == 7);  // run u=1..6
    ExtCyclicCode ext(rm1);
    CHECK(ext.bch_lower_bound() == 8);

    CHECK(CyclicCode::universe(15).bch_lower_bound() == 1);
    CHECK(CyclicCode::repetition(15).bch_lower_bound() == 15);
    CHECK(CyclicCode::repetition(7).bch_lower_bound() == 7);
}

TEST_CASE("exact minimum distance") {
    // extended R(1,4)* is R(1,4): [16,5,8]
    ExtCyclicCode rm1(CyclicCode(15, rm_star_zeros(1, 4)));
    auto d = exact_min_distance(rm1);
    CHECK(d.certified);
    CHECK(d.upper == 8);

    // extended repetition: [16,1,16]
    ExtCyclicCode rep(CyclicCode::repetition(15));
    auto dr = exact_min_distance(rep);
    CHECK(dr.certified);
    CHECK(dr.upper == 16);

    // bch <= exact wherever the exact value is computed
    std::mt19937 rng(11);
    auto cosets = cyclotomic_cosets(63);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<std::uint32_t> zeros;
        for (const auto& cs : cosets)
            if (rng() % 3) zeros.insert(zeros.end(), cs.begin(), cs.end());
        CyclicCode c(63, zeros);
        if (c.dim() == 0 || c.dim() > 24) continue;
        auto res = exact_min_distance(c);
        CHECK(res.certified);
        CHECK(c.bch_lower_bound() <= res.upper);
    }
}

TEST_CASE("dual code") {
    CyclicCode universe = CyclicCode::universe(15);
    CyclicCode zero = universe.dual();
    CHECK(zero.dim() == 0);
    CHECK(zero.zeros().size() == 15);
    CHECK(zero.dual() == universe);

    // duality is an involution on random Frobenius-closed zero sets at n=63
    std::mt19937 rng(13);
    auto cosets = cyclotomic_cosets(63);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::uint32_t> zeros;
        for (const auto& cs : cosets)
            if (rng() & 1) zeros.insert(zeros.end(), cs.begin(), cs.end());
        CyclicCode c(63, zeros);
        CHECK(c.dual().dual() == c);
        CHECK(c.dual().dim() == 63 - c.dim());
    }

    // all-pairs orthogonality on generator matrices
    CyclicCode c(15, rm_star_zeros(1, 4));
    CyclicCode cd = c.dual();
    for (const auto& a : c.generator_rows())
        for (const auto& b : cd.generator_rows()) {
            BitVec t = a;
            t.and_inplace(b);
            CHECK(t.weight() % 2 == 0);
        }
}

TEST_CASE("extension preserves dimension and parity structure") {
    CyclicCode c(15, rm_star_zeros(2, 4));
    ExtCyclicCode e(c);
    CHECK(e.dim() == c.dim());
    for (const auto& row : e.generator_rows()) {
        CHECK(row.weight() % 2 == 0);
        CHECK(e.contains(row));
    }
    // dual of the extended code has complementary dimension
    auto db = e.dual_basis();
    CHECK(static_cast<long>(db.size()) == e.length() - e.dim());
}
