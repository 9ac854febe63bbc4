// Minimal exact exterior calculus on C^2 in the coordinates (z, w, zb, wb):
// vector fields and one-/two-forms with polynomial coefficients, pairings,
// wedge products, and the exterior derivative. Used to derive and verify the
// pseudo-Hermitian structure equations symbolically.
#pragma once

#include <array>

#include "crsphere/polynomial.hpp"

namespace crsphere {

struct VectorField {
    // coefficients of d/dz, d/dw, d/dzb, d/dwb
    std::array<Polynomial, 4> coeff;

    Polynomial apply(const Polynomial& f) const {
        Polynomial out;
        for (int v = 0; v < 4; ++v) {
            if (coeff[v].is_zero()) continue;
            out += coeff[v] * f.derive(static_cast<Var>(v));
        }
        return out;
    }

    VectorField conj() const {
        // conjugation swaps the z/zb and w/wb slots
        return {{coeff[2].conj(), coeff[3].conj(), coeff[0].conj(), coeff[1].conj()}};
    }

    friend VectorField operator+(const VectorField& x, const VectorField& y) {
        VectorField out;
        for (int v = 0; v < 4; ++v) out.coeff[v] = x.coeff[v] + y.coeff[v];
        return out;
    }
    friend VectorField operator*(const GaussianRational& c, const VectorField& x) {
        VectorField out;
        for (int v = 0; v < 4; ++v) out.coeff[v] = c * x.coeff[v];
        return out;
    }
};

struct OneForm {
    // coefficients of dz, dw, dzb, dwb
    std::array<Polynomial, 4> coeff;

    Polynomial pair(const VectorField& x) const {
        Polynomial out;
        for (int v = 0; v < 4; ++v) out += coeff[v] * x.coeff[v];
        return out;
    }

    OneForm conj() const {
        return {{coeff[2].conj(), coeff[3].conj(), coeff[0].conj(), coeff[1].conj()}};
    }

    friend OneForm operator+(const OneForm& x, const OneForm& y) {
        OneForm out;
        for (int v = 0; v < 4; ++v) out.coeff[v] = x.coeff[v] + y.coeff[v];
        return out;
    }
    friend OneForm operator-(const OneForm& x, const OneForm& y) {
        OneForm out;
        for (int v = 0; v < 4; ++v) out.coeff[v] = x.coeff[v] - y.coeff[v];
        return out;
    }
    friend OneForm operator*(const GaussianRational& c, const OneForm& x) {
        OneForm out;
        for (int v = 0; v < 4; ++v) out.coeff[v] = c * x.coeff[v];
        return out;
    }
    friend OneForm operator*(const Polynomial& f, const OneForm& x) {
        OneForm out;
        for (int v = 0; v < 4; ++v) out.coeff[v] = f * x.coeff[v];
        return out;
    }
};

namespace detail {

// ordered variable pairs indexing two-form components
inline constexpr std::array<std::pair<int, int>, 6> kFormPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline int pair_slot(int i, int j) {
    for (int s = 0; s < 6; ++s)
        if (kFormPairs[s].first == i && kFormPairs[s].second == j) return s;
    return -1;
}

}  // namespace detail

struct TwoForm {
    // coefficients of dx_i ^ dx_j for the six ordered pairs i < j
    std::array<Polynomial, 6> coeff;

    Polynomial pair(const VectorField& x, const VectorField& y) const {
        Polynomial out;
        for (int s = 0; s < 6; ++s) {
            if (coeff[s].is_zero()) continue;
            const auto [i, j] = detail::kFormPairs[s];
            out += coeff[s] * (x.coeff[i] * y.coeff[j] - x.coeff[j] * y.coeff[i]);
        }
        return out;
    }

    friend TwoForm operator+(const TwoForm& x, const TwoForm& y) {
        TwoForm out;
        for (int s = 0; s < 6; ++s) out.coeff[s] = x.coeff[s] + y.coeff[s];
        return out;
    }
    friend TwoForm operator-(const TwoForm& x, const TwoForm& y) {
        TwoForm out;
        for (int s = 0; s < 6; ++s) out.coeff[s] = x.coeff[s] - y.coeff[s];
        return out;
    }
    friend TwoForm operator*(const GaussianRational& c, const TwoForm& x) {
        TwoForm out;
        for (int s = 0; s < 6; ++s) out.coeff[s] = c * x.coeff[s];
        return out;
    }
};

inline TwoForm wedge(const OneForm& x, const OneForm& y) {
    TwoForm out;
    for (int s = 0; s < 6; ++s) {
        const auto [i, j] = detail::kFormPairs[s];
        out.coeff[s] = x.coeff[i] * y.coeff[j] - x.coeff[j] * y.coeff[i];
    }
    return out;
}

// d(sum_i f_i dx_i) = sum_{i,j} (d_j f_i) dx_j ^ dx_i
inline TwoForm exterior_derivative(const OneForm& x) {
    TwoForm out;
    for (int i = 0; i < 4; ++i) {
        if (x.coeff[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            const Polynomial dji = x.coeff[i].derive(static_cast<Var>(j));
            if (dji.is_zero()) continue;
            if (j < i)
                out.coeff[detail::pair_slot(j, i)] += dji;
            else
                out.coeff[detail::pair_slot(i, j)] -= dji;
        }
    }
    return out;
}

}  // namespace crsphere
