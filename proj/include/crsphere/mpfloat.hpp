// Arbitrary-precision floating point (GMP mpf) helpers and a cyclic Jacobi
// eigensolver for complex Hermitian matrices. Floating point enters the
// library only here, after all matrices have been assembled exactly.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "crsphere/rational.hpp"

namespace crsphere {

inline mpf_class to_mpf(const Rational& r, int bits) { return mpf_class(r, bits); }

struct MpComplex {
    mpf_class re, im;

    MpComplex() = default;
    MpComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}

    MpComplex conj() const { return {re, -im}; }

    friend MpComplex operator+(const MpComplex& x, const MpComplex& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend MpComplex operator-(const MpComplex& x, const MpComplex& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend MpComplex operator*(const MpComplex& x, const MpComplex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend MpComplex operator*(const mpf_class& s, const MpComplex& x) {
        return {s * x.re, s * x.im};
    }
    mpf_class abs2() const { return re * re + im * im; }
};

// Eigenvalues of a complex Hermitian matrix by cyclic Jacobi sweeps with
// phase-reduced 2x2 rotations; ascending order. The input is consumed.
inline std::vector<mpf_class> hermitian_eigenvalues(std::vector<std::vector<MpComplex>> a,
                                                    int bits) {
    const size_t n = a.size();
    std::vector<mpf_class> eigen;
    if (n == 0) return eigen;

    mpf_class scale(0, bits);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            mpf_class m(0, bits);
            m = abs(a[r][c].re) + abs(a[r][c].im);
            if (m > scale) scale = m;
        }
    if (scale == 0) return std::vector<mpf_class>(n, mpf_class(0, bits));

    mpf_class tol(1, bits);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), static_cast<unsigned long>(bits > 16 ? bits - 8 : 8));
    tol *= scale;
    const mpf_class tol2 = tol * tol;

    for (int sweep = 0; sweep < 256; ++sweep) {
        mpf_class off2(0, bits);
        for (size_t p = 0; p + 1 < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off2 += a[p][q].abs2();
        if (off2 * 2 < tol2) break;
        if (sweep == 255) throw std::runtime_error("jacobi: no convergence in 256 sweeps");

        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                const mpf_class apq2 = a[p][q].abs2();
                if (apq2 == 0) continue;
                mpf_class apq_abs(0, bits);
                mpf_sqrt(apq_abs.get_mpf_t(), apq2.get_mpf_t());

                // phase u with a_pq = |a_pq| u; rotation angle from the real
                // symmetric reduction [[app, |a_pq|], [|a_pq|, aqq]]
                const MpComplex u{a[p][q].re / apq_abs, a[p][q].im / apq_abs};
                const mpf_class delta = (a[p][p].re - a[q][q].re) / (2 * apq_abs);
                mpf_class root(0, bits);
                mpf_sqrt(root.get_mpf_t(), mpf_class(delta * delta + 1).get_mpf_t());
                const mpf_class tch = (delta >= 0) ? mpf_class(delta + root)
                                                   : mpf_class(delta - root);
                const mpf_class tt = 1 / tch;  // tan(theta), smaller root
                mpf_class c(0, bits);
                mpf_sqrt(c.get_mpf_t(), mpf_class(1 / (1 + tt * tt)).get_mpf_t());
                const mpf_class s = tt * c;

                // columns: col_p' = c col_p + s ub col_q ; col_q' = -s col_p + c ub col_q
                const MpComplex ub = u.conj();
                for (size_t r = 0; r < n; ++r) {
                    const MpComplex xp = a[r][p], xq = a[r][q];
                    a[r][p] = c * xp + s * (ub * xq);
                    a[r][q] = MpComplex{-(s * xp.re), -(s * xp.im)} + c * (ub * xq);
                }
                // rows: row_p' = c row_p + s u row_q ; row_q' = -s row_p + c u row_q
                for (size_t col = 0; col < n; ++col) {
                    const MpComplex xp = a[p][col], xq = a[q][col];
                    a[p][col] = c * xp + s * (u * xq);
                    a[q][col] = MpComplex{-(s * xp.re), -(s * xp.im)} + c * (u * xq);
                }
                a[p][q] = MpComplex{mpf_class(0, bits), mpf_class(0, bits)};
                a[q][p] = MpComplex{mpf_class(0, bits), mpf_class(0, bits)};
                a[p][p].im = 0;
                a[q][q].im = 0;
            }
        }
    }

    eigen.reserve(n);
    for (size_t r = 0; r < n; ++r) eigen.push_back(a[r][r].re);
    std::sort(eigen.begin(), eigen.end());
    return eigen;
}

}  // namespace crsphere
