// Exact dense linear algebra over the Gaussian rationals: reduced row
// echelon form, null spaces, linear solves, rank, LDL^* of Hermitian
// positive-definite matrices, and fraction-free (Bareiss) determinants over
// the Gaussian integers after denominator clearing. Everything here is
// exact; no floating point.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "crsphere/rational.hpp"

namespace crsphere {

class GMatrix {
  public:
    GMatrix() = default;
    GMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, GaussianRational()) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    GaussianRational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    GMatrix conj_transpose() const {
        GMatrix m(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
        return m;
    }

    bool is_hermitian() const {
        if (rows_ != cols_) return false;
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = r; c < cols_; ++c)
                if (at(r, c) != at(c, r).conj()) return false;
        return true;
    }

    friend bool operator==(const GMatrix& x, const GMatrix& y) = default;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> data_;
};

// In-place RREF with first-nonzero-row pivoting (deterministic).
// Returns the pivot columns in order.
inline std::vector<size_t> rref(GMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pr = row;
        while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(row, c));
        const GaussianRational inv = GaussianRational(1) / m.at(row, col);
        for (size_t c = col; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const GaussianRational f = m.at(r, col);
            for (size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline size_t rank(GMatrix m) { return rref(m).size(); }

// Null space basis; one vector per free column, in column order. With the
// caller's columns ordered graded-lex this is deterministic across runs.
inline std::vector<std::vector<GaussianRational>> null_space(GMatrix m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<GaussianRational>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<GaussianRational> v(m.cols());
        v[free_col] = GaussianRational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves A x = b exactly; std::nullopt when inconsistent, the pivot-basic
// solution when underdetermined.
inline std::optional<std::vector<GaussianRational>> solve(const GMatrix& a,
                                                          const std::vector<GaussianRational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
    GMatrix aug(a.rows(), a.cols() + 1);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<GaussianRational> x(a.cols());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

// Exact determinant by plain elimination over Q(i); reference route used to
// cross-check the Bareiss route in tests.
inline GaussianRational det_field(GMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    GaussianRational det(1);
    const size_t n = m.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t pr = col;
        while (pr < n && m.at(pr, col).is_zero()) ++pr;
        if (pr == n) return GaussianRational(0);
        if (pr != col) {
            for (size_t c = 0; c < n; ++c) std::swap(m.at(pr, c), m.at(col, c));
            det = -det;
        }
        det = det * m.at(col, col);
        const GaussianRational inv = GaussianRational(1) / m.at(col, col);
        for (size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            const GaussianRational f = m.at(r, col) * inv;
            for (size_t c = col; c < n; ++c) m.at(r, c) = m.at(r, c) - f * m.at(col, c);
        }
    }
    return det;
}

namespace detail {

// Gaussian integer (Z[i]) with mpz components; just enough for Bareiss.
struct GaussInt {
    Integer re, im;
    bool is_zero() const { return re == 0 && im == 0; }
    friend GaussInt operator*(const GaussInt& x, const GaussInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussInt operator-(const GaussInt& x, const GaussInt& y) {
        return {x.re - y.re, x.im - y.im};
    }
    // exact division (the Bareiss divisor always divides in Z[i])
    friend GaussInt operator/(const GaussInt& x, const GaussInt& y) {
        const Integer n = y.re * y.re + y.im * y.im;
        GaussInt num{x.re * y.re + x.im * y.im, x.im * y.re - x.re * y.im};
        GaussInt q;
        mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
        mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
        return q;
    }
};

}  // namespace detail

// Fraction-free exact determinant: clear each row to Gaussian integers,
// run Bareiss (single-step), divide the integer determinant by the product
// of the row scalings.
inline GaussianRational det_bareiss(const GMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    const size_t n = m.rows();
    if (n == 0) return GaussianRational(1);

    std::vector<std::vector<detail::GaussInt>> a(n, std::vector<detail::GaussInt>(n));
    Integer scale = 1;
    for (size_t r = 0; r < n; ++r) {
        Integer lcm = 1;
        for (size_t c = 0; c < n; ++c) {
            const auto& e = m.at(r, c);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.re.get_den().get_mpz_t());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.im.get_den().get_mpz_t());
        }
        for (size_t c = 0; c < n; ++c) {
            const auto& e = m.at(r, c);
            Rational sre = e.re * lcm, sim = e.im * lcm;
            a[r][c] = {sre.get_num(), sim.get_num()};
        }
        scale *= lcm;
    }

    int swap_sign = 1;
    detail::GaussInt prev{Integer(1), Integer(0)};
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pr = k;
        while (pr < n && a[pr][k].is_zero()) ++pr;
        if (pr == n) return GaussianRational(0);
        if (pr != k) {
            std::swap(a[pr], a[k]);
            swap_sign = -swap_sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = detail::GaussInt{Integer(0), Integer(0)};
        }
        prev = a[k][k];
    }
    detail::GaussInt d = a[n - 1][n - 1];
    GaussianRational result{Rational(d.re), Rational(d.im)};
    if (swap_sign < 0) result = -result;
    return {result.re / scale, result.im / scale};
}

// Exact LDL^*: G = L D L^* with L unit lower triangular over Q(i) and D real.
// Throws std::domain_error unless G is Hermitian positive definite.
struct LdlResult {
    GMatrix l;                  // unit lower triangular
    std::vector<Rational> d;    // positive diagonal
};

inline LdlResult ldlt(const GMatrix& g) {
    if (!g.is_hermitian()) throw std::domain_error("ldlt: matrix is not Hermitian");
    const size_t n = g.rows();
    LdlResult out{GMatrix(n, n), std::vector<Rational>(n)};
    for (size_t j = 0; j < n; ++j) {
        GaussianRational dj = g.at(j, j);
        for (size_t k = 0; k < j; ++k)
            dj = dj - out.l.at(j, k) * out.l.at(j, k).conj() * GaussianRational(out.d[k]);
        if (!dj.is_real() || dj.re <= 0)
            throw std::domain_error("ldlt: matrix is not positive definite");
        out.d[j] = dj.re;
        out.l.at(j, j) = GaussianRational(1);
        for (size_t i = j + 1; i < n; ++i) {
            GaussianRational s = g.at(i, j);
            for (size_t k = 0; k < j; ++k)
                s = s - out.l.at(i, k) * out.l.at(j, k).conj() * GaussianRational(out.d[k]);
            out.l.at(i, j) = s / GaussianRational(out.d[j]);
        }
    }
    return out;
}

// M = L^{-1} A L^{-*} for unit lower triangular L; exact.
inline GMatrix congruence_by_unit_lower_inverse(const GMatrix& l, const GMatrix& a) {
    const size_t n = a.rows();
    GMatrix y = a;  // forward-substitute L Y = A, rows top-down
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < i; ++k)
            for (size_t c = 0; c < n; ++c)
                y.at(i, c) = y.at(i, c) - l.at(i, k) * y.at(k, c);
    // then M L^* = Y, i.e. columns: M col_j = Y col_j - sum_{k<j} conj(L_{j,k}) ... via
    // M = Y (L^*)^{-1}: back-substitute on columns left-to-right
    GMatrix mmat = y;
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < j; ++k)
            for (size_t r = 0; r < n; ++r)
                mmat.at(r, j) = mmat.at(r, j) - mmat.at(r, k) * l.at(j, k).conj();
    return mmat;
}

}  // namespace crsphere
