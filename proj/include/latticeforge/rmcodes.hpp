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

#ifndef LATTICEFORGE_RMCODES_HPP
#define LATTICEFORGE_RMCODES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "latticeforge/cyclic.hpp"

namespace lf {

// ------------------------------------------------------------------ 2-weight combinatorics
//
// Exponents u live in [0, 4^m - 1] (raw range; both ends map to the
// eigenvalue 1 of sigma).  Bits at odd positions are counted by O, bits at
// even positions by E; wt2 = O + E.

struct ThetaLabel {
    std::uint32_t u;
    int wt2;
    int O;
    int E;
    static ThetaLabel of(std::uint32_t u, int m);
};

inline int wt2_of(std::uint32_t u) { return __builtin_popcount(u); }
int odd_bits(std::uint32_t u, int m);
int even_bits(std::uint32_t u, int m);

/// M_+ (m-k even) or M_- (m-k odd); M_r selects by the parity of r.
std::vector<int> m_plus(int m);
std::vector<int> m_minus(int m);
std::vector<int> m_r(int m, int r);
bool in_m_r(int m, int r, int k);

/// Raw exponent strata:
///   theta_r:  wt2(u) = 2m - r
///   theta_k:  |O(u) - E(u)| = m - k
///   theta_rk: the intersection (empty when k is not in M_r)
std::vector<std::uint32_t> theta_r(int m, int r);
std::vector<std::uint32_t> theta_k_set(int m, int k);
std::vector<std::uint32_t> theta_rk(int m, int r, int k);

/// Closed-form cardinalities (counting eigenvalues, i.e. 1 only once).
Int card_theta_r(int m, int r);
Int card_theta_k(int m, int k);
Int card_theta_rk(int m, int r, int k);

/// Eigenvalue multiset: exponent residue mod (4^m - 1) -> multiplicity.
using EigenMultiset = std::map<std::uint32_t, int>;
EigenMultiset to_eigen_multiset(const std::vector<std::uint32_t>& raw_exponents, long n);

// ------------------------------------------------------------------ Singer coordinates

/// Coordinate frame of length 4^m: index 0 is the extension coordinate
/// (the zero vector of V = GF(2)^(2m)); a nonzero v sits at 1 + log_zeta(v).
/// sigma is multiplication by zeta; eta = sigma^((4^m-1)/3).
class SingerContext {
   public:
    explicit SingerContext(int m, std::shared_ptr<const GF2k> field = nullptr);

    int m() const { return m_; }
    long n() const { return n_; }        // 4^m - 1
    long N() const { return n_ + 1; }    // 4^m
    const GF2k& field() const { return *field_; }
    std::shared_ptr<const GF2k> field_ptr() const { return field_; }

    long index_of_vec(std::uint32_t v) const;  // v as bit mask in GF(2)^(2m)
    std::uint32_t vec_of_index(long idx) const;

    /// sigma as a coordinate permutation: coordinate i moves to sigma()[i].
    const std::vector<long>& sigma() const { return sigma_; }
    const std::vector<long>& eta() const { return eta_; }
    static std::vector<long> perm_power(const std::vector<long>& p, long e);
    static BitVec apply_perm(const std::vector<long>& p, const BitVec& w);

   private:
    int m_;
    long n_;
    std::shared_ptr<const GF2k> field_;
    std::vector<long> sigma_, eta_;
};

// ------------------------------------------------------------------ Reed-Muller & friends

/// Zero set Z_r as residues mod n (Notation: 0 < u <= 4^m-1, wt2 <= 2m-1-r).
std::vector<std::uint32_t> z_r(int m, int r);
/// Z_{r,I} = Z_{r-1} minus the strata theta_rk for k in I.
std::vector<std::uint32_t> z_r_set(int m, int r, const std::set<int>& I);

/// Reed-Muller code R(r,2m) as an extended cyclic code (r = 2m yields the
/// full space, flagged: it is not an extended cyclic code).
ExtCyclicCode reed_muller(int r, const SingerContext& ctx);
Int rm_dimension(int m, int r);

/// The intermediate codes C(r, I, 2m); I must be a subset of M_r.
/// r = 2m is the degenerate case R(2m-1,2m) / full space.
ExtCyclicCode code_c(int r, const std::set<int>& I, const SingerContext& ctx);
Int code_c_dimension(int m, int r, const std::set<int>& I);

/// Characteristic vector of the coordinate subspace spanned by the standard
/// basis vectors indexed by `mask` (Boolean-monomial basis of the RM codes).
BitVec chi_coordinate_subspace(std::uint32_t mask, const SingerContext& ctx);
/// Canonical basis of R(r,2m): chi_U over coordinate subspaces of dim >= 2m-r.
std::vector<BitVec> rm_monomial_basis(int r, const SingerContext& ctx);

/// Independent construction straight from the definition: the span of the
/// characteristic functions of all affine subspaces of dimension 2m-r.
std::vector<BitVec> rm_affine_generators(int r, const SingerContext& ctx);

/// All d-dimensional subspaces of GF(2)^k, each as a list of basis masks.
std::vector<std::vector<std::uint32_t>> subspaces_of_dim(int k, int d);

// ------------------------------------------------------------------ quotients & eigenvalues

/// Eigenvalue multiset of sigma acting on span(A)/span(B) over the splitting
/// field; B must be a sigma-invariant subspace of A.  Lengths must agree with
/// the permutation.
EigenMultiset sigma_eigen_on_quotient(const std::vector<BitVec>& a_rows, const std::vector<BitVec>& b_rows,
                                      const std::vector<long>& sigma, const GF2k& field, long n);

/// Characteristic polynomial over GF(2) of a square bit matrix (rows).
BinPoly f2_charpoly(std::vector<BitVec> mat);

/// prod over distinct residue cosets of the minimal polynomial, raised to the
/// stated multiplicities (multiplicity applies per coset member).
BinPoly charpoly_from_eigen(const EigenMultiset& eig, const GF2k& field, long n);

/// Exponent residue of omega^{-1} zeta^{sum_{i in I} (-2)^i} (combinatorial
/// eigenvalue bookkeeping used by the property tests).
std::uint32_t eo_exponent(int m, const std::set<int>& I);

// ------------------------------------------------------------------ Schur product

struct SchurWitness {
    std::size_t member;  // index i of the chain member C_i
    std::size_t left, right;  // basis vector indices whose product escapes C_{i+1}
};

/// Search products of basis vectors of each member for one leaving the next
/// member (the space after the last member is the full space).  Returns the
/// first witness, or nothing if all products stay inside.
std::optional<SchurWitness> schur_violation(const std::vector<ExtCyclicCode>& members,
                                            const std::vector<std::vector<BitVec>>& bases);

}  // namespace lf

#endif
