#include "reesdeg/matrix.hpp"

namespace reesdeg {

std::vector<Rational> solve_linear(const RationalMatrix& A,
                                   const std::vector<Rational>& c) {
    const size_t n = A.rows();
    if (A.cols() != n) throw SingularMatrixError("solve_linear: matrix not square");
    if (c.size() != n) throw SingularMatrixError("solve_linear: size mismatch");

    // integer-cleared augmented matrix [A | c]
    Integer den_lcm(1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    A.at(i, j).get_den().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c[i].get_den().get_mpz_t());
    }
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Rational v = A.at(i, j) * Rational(den_lcm);
            m[i][j] = v.get_num();
        }
        Rational v = c[i] * Rational(den_lcm);
        m[i][n] = v.get_num();
    }

    // fraction-free forward elimination
    Integer prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) throw SingularMatrixError("singular matrix");
            std::swap(m[k], m[piv]);
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    if (m[n - 1][n - 1] == 0) throw SingularMatrixError("singular matrix");

    // back substitution in rationals
    std::vector<Rational> x(n);
    for (size_t ii = n; ii-- > 0;) {
        Rational sum(m[ii][n]);
        for (size_t j = ii + 1; j < n; ++j) sum -= Rational(m[ii][j]) * x[j];
        x[ii] = sum / Rational(m[ii][ii]);
        x[ii].canonicalize();
    }
    return x;
}

Rational determinant(const RationalMatrix& A) {
    const size_t n = A.rows();
    if (A.cols() != n) throw SingularMatrixError("determinant: matrix not square");
    if (n == 0) return Rational(1);
    Integer den_lcm(1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    A.at(i, j).get_den().get_mpz_t());
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational v = A.at(i, j) * Rational(den_lcm);
            m[i][j] = v.get_num();
        }
    Integer prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Rational(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Rational det(m[n - 1][n - 1] * sign);
    Rational scale = Rational(1) / Rational(ipow(den_lcm, static_cast<unsigned long>(n)));
    det *= scale;
    det.canonicalize();
    return det;
}

std::vector<size_t> rref(RationalMatrix& A) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
        size_t piv = row;
        while (piv < A.rows() && A.at(piv, col) == 0) ++piv;
        if (piv == A.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < A.cols(); ++j)
                std::swap(A.at(piv, j), A.at(row, j));
        Rational inv = Rational(1) / A.at(row, col);
        for (size_t j = col; j < A.cols(); ++j) {
            A.at(row, j) *= inv;
            A.at(row, j).canonicalize();
        }
        for (size_t i = 0; i < A.rows(); ++i) {
            if (i == row || A.at(i, col) == 0) continue;
            Rational f = A.at(i, col);
            for (size_t j = col; j < A.cols(); ++j) {
                A.at(i, j) -= f * A.at(row, j);
                A.at(i, j).canonicalize();
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& A) {
    RationalMatrix R = A;
    std::vector<size_t> pivots = rref(R);
    std::vector<bool> is_pivot(A.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free_col = 0; free_col < A.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(A.cols(), Rational(0));
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -R.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace reesdeg
