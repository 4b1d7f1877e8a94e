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

#include "latticeforge/lll.hpp"

#include <stdexcept>

namespace lf {

GSData integer_gs(const IntMatrix& gram) {
    const std::size_t n = gram.rows();
    GSData gs;
    gs.d.assign(n + 1, Int(1));
    gs.lambda = IntMatrix(n, n);
    Int u, t;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            u = gram.at(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                t = gs.d[k + 1] * u - gs.lambda.at(i, k) * gs.lambda.at(j, k);
                mpz_divexact(u.get_mpz_t(), t.get_mpz_t(), gs.d[k].get_mpz_t());
            }
            if (j < i)
                gs.lambda.at(i, j) = u;
            else {
                if (sgn(u) <= 0) throw std::domain_error("integer_gs: Gram not positive definite (rank-deficient basis)");
                gs.d[i + 1] = u;
            }
        }
    return gs;
}

namespace {

struct LLLState {
    IntMatrix* basis;
    IntMatrix* transform;
    std::vector<Int> d;
    IntMatrix lambda;

    std::size_t n() const { return basis->rows(); }

    void init() {
        GSData gs = integer_gs(basis->gram());
        d = std::move(gs.d);
        lambda = std::move(gs.lambda);
    }

    void row_sub(std::size_t dst, std::size_t src, const Int& q) {
        if (sgn(q) == 0) return;
        for (std::size_t j = 0; j < basis->cols(); ++j) basis->at(dst, j) -= q * basis->at(src, j);
        if (transform)
            for (std::size_t j = 0; j < transform->cols(); ++j) transform->at(dst, j) -= q * transform->at(src, j);
    }

    void reduce(std::size_t k, std::size_t l) {
        Int two_lam = 2 * lambda.at(k, l);
        if (cmp_abs(two_lam, d[l + 1]) <= 0) return;
        // q = nearest integer to lambda(k,l)/d[l+1]
        Int q, num = 2 * lambda.at(k, l) + d[l + 1];
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Int(2 * d[l + 1]).get_mpz_t());
        row_sub(k, l, q);
        for (std::size_t j = 0; j < l; ++j) lambda.at(k, j) -= q * lambda.at(l, j);
        lambda.at(k, l) -= q * d[l + 1];
    }

    // Swap rows k and k-1, updating lambda and d (Cohen alg. 2.6.3).
    void swap_rows(std::size_t k) {
        for (std::size_t j = 0; j < basis->cols(); ++j)
            mpz_swap(basis->at(k, j).get_mpz_t(), basis->at(k - 1, j).get_mpz_t());
        if (transform)
            for (std::size_t j = 0; j < transform->cols(); ++j)
                mpz_swap(transform->at(k, j).get_mpz_t(), transform->at(k - 1, j).get_mpz_t());
        for (std::size_t j = 0; j + 1 < k; ++j)
            mpz_swap(lambda.at(k, j).get_mpz_t(), lambda.at(k - 1, j).get_mpz_t());
        Int lam = lambda.at(k, k - 1);
        Int B = d[k - 1] * d[k + 1] + lam * lam;
        mpz_divexact(B.get_mpz_t(), B.get_mpz_t(), d[k].get_mpz_t());
        for (std::size_t i = k + 1; i < n(); ++i) {
            Int t = lambda.at(i, k);
            Int x = d[k + 1] * lambda.at(i, k - 1) - lam * t;
            mpz_divexact(lambda.at(i, k).get_mpz_t(), x.get_mpz_t(), d[k].get_mpz_t());
            x = B * t + lam * lambda.at(i, k);
            mpz_divexact(lambda.at(i, k - 1).get_mpz_t(), x.get_mpz_t(), d[k + 1].get_mpz_t());
        }
        d[k] = B;
    }

    void run(long dn, long dd) {
        std::size_t k = 1;
        while (k < n()) {
            reduce(k, k - 1);
            // Lovasz: d[k+1]*d[k-1] >= (dn/dd)*d[k]^2 - lambda(k,k-1)^2
            Int lhs = dd * d[k + 1] * d[k - 1];
            Int rhs = dn * d[k] * d[k] - dd * lambda.at(k, k - 1) * lambda.at(k, k - 1);
            if (lhs < rhs) {
                swap_rows(k);
                k = (k > 1) ? k - 1 : 1;
            } else {
                for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
                ++k;
            }
        }
    }
};

// One deep-insertion sweep; returns true if a row was moved.
bool deep_insertion_pass(IntMatrix& basis, IntMatrix* transform, long dn, long dd) {
    GSData gs = integer_gs(basis.gram());
    const std::size_t n = basis.rows();
    IntMatrix g = basis.gram();
    for (std::size_t i = 1; i < n; ++i) {
        Rat c(g.at(i, i));
        for (std::size_t j = 0; j < i; ++j) {
            // insert b_i before position j when |pi_j(b_i)|^2 < delta * |b*_j|^2
            Rat bj(gs.d[j + 1], gs.d[j]);
            if (c * dd < bj * dn) {
                // move row i to slot j, shifting j..i-1 down
                std::vector<std::size_t> order;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == j) order.push_back(i);
                    if (r != i) order.push_back(r);
                }
                auto permute = [&](IntMatrix& mt) {
                    IntMatrix out(mt.rows(), mt.cols());
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t col = 0; col < mt.cols(); ++col) out.at(r, col) = mt.at(order[r], col);
                    mt = out;
                };
                permute(basis);
                if (transform) permute(*transform);
                return true;
            }
            Rat mu2(gs.lambda.at(i, j) * gs.lambda.at(i, j), gs.d[j + 1] * gs.d[j + 1]);
            c -= mu2 * bj;
        }
    }
    return false;
}

}  // namespace

void lll_reduce(IntMatrix& basis, long delta_num, long delta_den, bool deep, IntMatrix* transform) {
    if (transform) *transform = IntMatrix::identity(basis.rows());
    LLLState st{&basis, transform, {}, {}};
    st.init();
    st.run(delta_num, delta_den);
    if (deep) {
        int passes = 0;
        while (passes < 64 && deep_insertion_pass(basis, transform, delta_num, delta_den)) {
            LLLState st2{&basis, transform, {}, {}};
            st2.init();
            st2.run(delta_num, delta_den);
            ++passes;
        }
    }
}

}  // namespace lf
