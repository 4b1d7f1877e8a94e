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

#include "latticeforge/intmatrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace lf {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("IntMatrix::mul: shape mismatch");
    IntMatrix p(r_, o.c_);
    Int tmp;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Int& aik = at(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) {
                tmp = aik * o.at(k, j);
                p.at(i, j) += tmp;
            }
        }
    return p;
}

IntMatrix IntMatrix::gram() const {
    IntMatrix g(r_, r_);
    Int s, t;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            s = 0;
            for (std::size_t k = 0; k < c_; ++k) {
                t = at(i, k) * at(j, k);
                s += t;
            }
            g.at(i, j) = s;
            g.at(j, i) = s;
        }
    return g;
}

void IntMatrix::append_rows(const IntMatrix& o) {
    if (r_ == 0 && c_ == 0) c_ = o.c_;
    if (c_ != o.c_) throw std::invalid_argument("IntMatrix::append_rows: shape mismatch");
    a_.insert(a_.end(), o.a_.begin(), o.a_.end());
    r_ += o.r_;
}

IntMatrix IntMatrix::scaled(const Int& s) const {
    IntMatrix m(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

namespace {

// In-place row HNF; returns number of nonzero rows.  When `transform` is
// non-null it is kept as the unimodular row operation applied so far.
std::size_t hnf_inplace(IntMatrix& m, IntMatrix* transform) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t pr = 0;
    Int q;
    auto rowsub = [&](std::size_t dst, std::size_t src, const Int& f) {
        if (sgn(f) == 0) return;
        for (std::size_t j = 0; j < cols; ++j) m.at(dst, j) -= f * m.at(src, j);
        if (transform)
            for (std::size_t j = 0; j < transform->cols(); ++j)
                transform->at(dst, j) -= f * transform->at(src, j);
    };
    auto rowswap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) mpz_swap(m.at(a, j).get_mpz_t(), m.at(b, j).get_mpz_t());
        if (transform)
            for (std::size_t j = 0; j < transform->cols(); ++j)
                mpz_swap(transform->at(a, j).get_mpz_t(), transform->at(b, j).get_mpz_t());
    };
    auto rowneg = [&](std::size_t i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = -m.at(i, j);
        if (transform)
            for (std::size_t j = 0; j < transform->cols(); ++j)
                transform->at(i, j) = -transform->at(i, j);
    };
    for (std::size_t col = 0; col < cols && pr < rows; ++col) {
        // Euclidean reduction of the column below the pivot row.
        while (true) {
            std::size_t best = pr;
            bool found = false;
            for (std::size_t i = pr; i < rows; ++i) {
                if (sgn(m.at(i, col)) == 0) continue;
                if (!found || cmp_abs(m.at(i, col), m.at(best, col)) < 0 || sgn(m.at(best, col)) == 0) {
                    best = i;
                    found = true;
                }
            }
            if (!found) break;
            rowswap(pr, best);
            if (sgn(m.at(pr, col)) < 0) rowneg(pr);
            bool clean = true;
            for (std::size_t i = pr + 1; i < rows; ++i) {
                if (sgn(m.at(i, col)) == 0) continue;
                q = m.at(i, col) / m.at(pr, col);  // truncated; remainder handled next sweep
                rowsub(i, pr, q);
                if (sgn(m.at(i, col)) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pr < rows && sgn(m.at(pr, col)) != 0) {
            for (std::size_t i = 0; i < pr; ++i) {
                Int f;
                mpz_fdiv_q(f.get_mpz_t(), m.at(i, col).get_mpz_t(), m.at(pr, col).get_mpz_t());
                rowsub(i, pr, f);
            }
            ++pr;
        }
    }
    return pr;
}

}  // namespace

IntMatrix IntMatrix::hnf() const {
    IntMatrix m = *this;
    std::size_t nz = hnf_inplace(m, nullptr);
    IntMatrix out(nz, c_);
    for (std::size_t i = 0; i < nz; ++i)
        for (std::size_t j = 0; j < c_; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

IntMatrix IntMatrix::hnf_stack(const IntMatrix& o) const {
    IntMatrix m = *this;
    m.append_rows(o);
    return m.hnf();
}

IntMatrix IntMatrix::kernel() const {
    IntMatrix m = *this;
    IntMatrix u = IntMatrix::identity(r_);
    std::size_t nz = hnf_inplace(m, &u);
    IntMatrix ker(r_ - nz, r_);
    for (std::size_t i = nz; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) ker.at(i - nz, j) = u.at(i, j);
    return ker;
}

Int IntMatrix::det_bareiss() const {
    if (r_ != c_) throw std::invalid_argument("det_bareiss: not square");
    const std::size_t n = r_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m.at(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m.at(p, k)) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) mpz_swap(m.at(k, j).get_mpz_t(), m.at(p, j).get_mpz_t());
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::vector<Int> IntMatrix::smith_divisors() const {
    IntMatrix m = *this;
    const std::size_t rows = r_, cols = c_;
    const std::size_t k = std::min(rows, cols);
    std::vector<Int> div(k, 0);
    std::size_t s = 0;
    Int q;
    while (s < k) {
        // Locate the smallest nonzero entry in the trailing block.
        std::size_t pi = s, pj = s;
        bool found = false;
        for (std::size_t i = s; i < rows; ++i)
            for (std::size_t j = s; j < cols; ++j) {
                if (sgn(m.at(i, j)) == 0) continue;
                if (!found || cmp_abs(m.at(i, j), m.at(pi, pj)) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        for (std::size_t j = 0; j < cols; ++j) mpz_swap(m.at(s, j).get_mpz_t(), m.at(pi, j).get_mpz_t());
        for (std::size_t i = 0; i < rows; ++i) mpz_swap(m.at(i, s).get_mpz_t(), m.at(i, pj).get_mpz_t());
        if (sgn(m.at(s, s)) < 0)
            for (std::size_t j = s; j < cols; ++j) m.at(s, j) = -m.at(s, j);

        bool dirty = false;
        for (std::size_t i = s + 1; i < rows; ++i) {
            if (sgn(m.at(i, s)) == 0) continue;
            q = m.at(i, s) / m.at(s, s);
            for (std::size_t j = s; j < cols; ++j) m.at(i, j) -= q * m.at(s, j);
            if (sgn(m.at(i, s)) != 0) dirty = true;
        }
        for (std::size_t j = s + 1; j < cols; ++j) {
            if (sgn(m.at(s, j)) == 0) continue;
            q = m.at(s, j) / m.at(s, s);
            for (std::size_t i = s; i < rows; ++i) m.at(i, j) -= q * m.at(i, s);
            if (sgn(m.at(s, j)) != 0) dirty = true;
        }
        if (dirty) continue;

        // Pivot must divide the rest of the block; fold a violating row in.
        bool divides = true;
        for (std::size_t i = s + 1; i < rows && divides; ++i)
            for (std::size_t j = s + 1; j < cols && divides; ++j)
                if (!mpz_divisible_p(m.at(i, j).get_mpz_t(), m.at(s, s).get_mpz_t())) {
                    for (std::size_t jj = s; jj < cols; ++jj) m.at(s, jj) += m.at(i, jj);
                    divides = false;
                }
        if (!divides) continue;
        div[s] = m.at(s, s);
        ++s;
    }
    return div;
}

IntMatrix IntMatrix::solve_left_scaled(const Int& s) const {
    IntMatrix num;
    Int den;
    inverse_rational(num, den);
    IntMatrix x(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) {
            Int t = num.at(i, j) * s;
            if (!mpz_divisible_p(t.get_mpz_t(), den.get_mpz_t()))
                throw std::domain_error("solve_left_scaled: non-integral solution");
            mpz_divexact(x.at(i, j).get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
        }
    return x;
}

void IntMatrix::inverse_rational(IntMatrix& num, Int& den) const {
    if (r_ != c_) throw std::invalid_argument("inverse_rational: not square");
    const std::size_t n = r_;
    // Gauss-Jordan over Q.
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(at(i, j));
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && sgn(m[p][col]) == 0) ++p;
        if (p == n) throw std::domain_error("inverse_rational: singular matrix");
        std::swap(m[col], m[p]);
        Rat inv = 1 / m[col][col];
        for (std::size_t j = col; j < 2 * n; ++j) m[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(m[i][col]) == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int d = m[i][n + j].get_den();
            den = lcm(den, d);
        }
    num = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) num.at(i, j) = m[i][n + j].get_num() * (den / m[i][n + j].get_den());
}

bool IntMatrix::hnf_contains(const std::vector<Int>& v) const {
    if (v.size() != c_) return false;
    std::vector<Int> t = v;
    std::size_t row = 0;
    Int q;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
        if (sgn(at(row, col)) == 0) {
            if (sgn(t[col]) != 0) return false;
            continue;
        }
        if (!mpz_divisible_p(t[col].get_mpz_t(), at(row, col).get_mpz_t())) return false;
        q = t[col] / at(row, col);
        if (sgn(q) != 0)
            for (std::size_t j = col; j < c_; ++j) t[j] -= q * at(row, j);
        ++row;
    }
    for (const Int& x : t)
        if (sgn(x) != 0) return false;
    return true;
}

bool IntMatrix::hnf_contains_rows(const IntMatrix& o) const {
    std::vector<Int> v(c_);
    for (std::size_t i = 0; i < o.rows(); ++i) {
        for (std::size_t j = 0; j < c_; ++j) v[j] = o.at(i, j);
        if (!hnf_contains(v)) return false;
    }
    return true;
}

}  // namespace lf
