#include "toric/linalg.hpp"

#include "toric/error.hpp"

#include <utility>

namespace toric {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DomainError(ErrorKind::LengthMismatch, "matrix row " + std::to_string(i));
        }
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::col(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError(ErrorKind::LengthMismatch, "matrix product");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Integer determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw DomainError(ErrorKind::LengthMismatch, "determinant");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// Locates the nonzero entry of smallest magnitude in the trailing block.
bool smallest_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Integer a = abs(d(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    auto row_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
        d.add_row_multiple(dst, src, k);
        u.add_row_multiple(dst, src, k);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
        d.add_col_multiple(dst, src, k);
        v.add_col_multiple(dst, src, k);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!smallest_pivot(d, t, pi, pj)) break;
        for (;;) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                row_op(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                col_op(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (clean) {
                // Divisibility: the pivot must divide every remaining entry.
                bool divides = true;
                for (std::size_t i = t + 1; i < m && divides; ++i)
                    for (std::size_t j = t + 1; j < n; ++j) {
                        if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                            row_op(t, i, 1);
                            divides = false;
                            break;
                        }
                    }
                if (divides) break;
            }
            // A remainder smaller than the pivot exists now; restart from it.
            smallest_pivot(d, t, pi, pj);
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

namespace {

// Reduced row echelon form over Q. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<RatVector> to_rational_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    std::vector<RatVector> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != cols) throw DomainError(ErrorKind::LengthMismatch, "linear system row");
        m.push_back(to_rational(row));
    }
    return m;
}

}  // namespace

IntMatrix unimodular_inverse(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw DomainError(ErrorKind::LengthMismatch, "inverse of non-square matrix");
    std::vector<RatVector> m(n, RatVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
        m[i][n + i] = 1;
    }
    auto pivots = rref(m, n);
    if (pivots.size() != n) throw DomainError(ErrorKind::ValidationFailed, "singular matrix");
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = m[i][n + j];
            if (x.get_den() != 1) throw DomainError(ErrorKind::ValidationFailed, "matrix is not unimodular");
            inv(i, j) = x.get_num();
        }
    return inv;
}

std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t cols) {
    auto m = to_rational_rows(rows, cols);
    auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector x(cols);
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
        basis.push_back(primitive(x));
    }
    return basis;
}

std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t cols) {
    auto m = to_rational_rows(rows, cols);
    return rref(m, cols).size();
}

std::optional<RatVector> solve_rational(const std::vector<IntVector>& rows, const RatVector& rhs,
                                        std::size_t cols) {
    if (rows.size() != rhs.size()) throw DomainError(ErrorKind::LengthMismatch, "right-hand side");
    std::vector<RatVector> m = to_rational_rows(rows, cols);
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
    auto pivots = rref(m, cols + 1);
    RatVector x(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;
        x[pivots[r]] = m[r][cols];
    }
    return x;
}

std::optional<IntVector> solve_integer(const std::vector<IntVector>& rows, const IntVector& rhs, std::size_t cols) {
    if (rows.empty()) return IntVector(cols);
    const SmithDecomposition snf = smith_normal_form(IntMatrix::from_rows(rows, cols));
    // U A V = D, so A x = b iff D y = U b with x = V y.
    IntVector ub(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) ub[i] += snf.left(i, j) * rhs[j];
    IntVector y(cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Integer d = i < cols ? snf.diagonal(i, i) : Integer(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    IntVector x(cols);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) x[i] += snf.right(i, j) * y[j];
    return x;
}

}  // namespace toric
