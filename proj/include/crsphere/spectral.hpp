// The paper-facing spectral machinery: the invariant subspaces V_k spanned by
// (Z_1)^{2i-2} applied to a seed in H_{2k-1,0}, the Hermitian matrix pair
// (A, G) of (1-t^2)^2 P(t) against the (non-orthonormal) V_k basis, exact
// determinant signs, Kohn-Laplacian degree blocks, and generalized Hermitian
// eigenvalues. Everything through determinants and ranks is exact; floating
// point enters only in the final eigensolve.
#pragma once

#include <atomic>
#include <cstdint>
#include <thread>

#include "crsphere/mpfloat.hpp"
#include "crsphere/operators.hpp"
#include "crsphere/verify.hpp"

namespace crsphere {

struct invariance_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SeedChoice {
    enum class Kind { Default, Random, Explicit };
    Kind kind = Kind::Default;
    std::uint64_t rng_seed = 0;
    Polynomial explicit_poly;

    static SeedChoice defaults() { return {}; }
    static SeedChoice random(std::uint64_t s) { return {Kind::Random, s, {}}; }
    static SeedChoice explicit_seed(Polynomial p) { return {Kind::Explicit, 0, std::move(p)}; }

    // "default" or "random:<n>"; explicit seeds are built from polynomials
    static SeedChoice parse(const std::string& text) {
        if (text == "default") return defaults();
        if (text.rfind("random:", 0) == 0)
            return random(std::stoull(text.substr(7)));
        throw std::invalid_argument("seed choice must be 'default' or 'random:<n>', got " + text);
    }
};

// V_k data: vectors[i-1] = (Z_1)^{2i-2} seed, i = 1..k, kept unnormalized.
struct VkBasis {
    int k = 0;
    Polynomial seed;
    std::vector<Polynomial> vectors;
    std::vector<Rational> norm_squares;
};

inline Polynomial default_vk_seed(int k) {
    return Polynomial::monomial(Monomial{2 * k - 1, 0, 0, 0});
}

inline VkBasis build_vk(int k, const SeedChoice& choice = {}) {
    if (k < 1) throw std::invalid_argument("build_vk: k must be >= 1");

    Polynomial seed;
    switch (choice.kind) {
        case SeedChoice::Kind::Default:
            seed = default_vk_seed(k);
            break;
        case SeedChoice::Kind::Random: {
            detail::SampleRng rng{choice.rng_seed};
            for (const auto& b : harmonic_basis(2 * k - 1, 0).basis) {
                Rational re(rng.range(-9, 9), rng.range(1, 9));
                Rational im(rng.range(-9, 9), rng.range(1, 9));
                re.canonicalize();
                im.canonicalize();
                seed += GaussianRational(re, im) * b;
            }
            break;
        }
        case SeedChoice::Kind::Explicit:
            seed = choice.explicit_poly;
            break;
    }

    if (seed.is_zero()) throw std::invalid_argument("build_vk: seed polynomial is zero");
    if (!seed.is_homogeneous(2 * k - 1, 0))
        throw std::invalid_argument("build_vk: seed is not of bidegree (2k-1, 0) for k = " +
                                    std::to_string(k));
    if (!flat_laplacian(seed).is_zero())
        throw std::logic_error("build_vk: seed is not harmonic");

    VkBasis out;
    out.k = k;
    out.seed = seed;
    const VectorField z1 = standard_z1();
    Polynomial u = seed;
    for (int i = 1; i <= k; ++i) {
        if (i > 1) u = z1.apply(z1.apply(u));
        if (u.is_zero())
            throw std::invalid_argument(
                "build_vk: seed annihilated by (Z_1)^" + std::to_string(2 * i - 2) +
                " before i = k; offending seed: " + seed.to_text());
        if (!u.is_homogeneous(2 * k - 2 * i + 1, 2 * i - 2))
            throw std::logic_error("build_vk: vector has wrong bidegree");
        if (!flat_laplacian(u).is_zero())
            throw std::logic_error("build_vk: vector is not harmonic");
        out.vectors.push_back(u);
        const GaussianRational n = inner_product(u, u);
        if (!n.is_real() || n.re <= 0) throw std::logic_error("build_vk: bad norm");
        out.norm_squares.push_back(n.re);
    }
    return out;
}

struct MatrixPair {
    GMatrix a;  // Hermitian operator matrix
    GMatrix g;  // Hermitian positive-definite Gram matrix
};

namespace detail {

inline MatrixPair pair_from_operator(const std::vector<SphereFunction>& basis,
                                     const std::vector<SphereFunction>& images) {
    const size_t n = basis.size();
    MatrixPair out{GMatrix(n, n), GMatrix(n, n)};
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            out.a.at(i, j) = inner_product(images[j], basis[i]);
            out.g.at(i, j) = inner_product(basis[j], basis[i]);
        }
    return out;
}

}  // namespace detail

// Matrix pair of (1-t^2)^2 P(t) on V_k. Verifies exactly that P(t) maps V_k
// into itself: the re-expansion of each image in the basis leaves zero
// residual; anything else would falsify the invariance claim (or expose an
// operator bug) and raises invariance_violation.
inline MatrixPair assemble_paneitz_matrix(int k, const Rational& t,
                                          const SeedChoice& choice = {}) {
    const RossiGeometry geom = connection_data(t);
    const VkBasis vk = build_vk(k, choice);
    const Rational levi = 1 - t * t;
    const GaussianRational scale{levi * levi};

    std::vector<SphereFunction> basis, images;
    basis.reserve(k);
    images.reserve(k);
    for (const auto& u : vk.vectors) basis.push_back(canonicalize(u));
    for (const auto& b : basis) images.push_back(scale * paneitz(geom, b));

    MatrixPair out = detail::pair_from_operator(basis, images);

    for (int j = 0; j < k; ++j) {
        std::vector<GaussianRational> rhs(k);
        for (int i = 0; i < k; ++i) rhs[i] = out.a.at(i, j);
        const auto coeffs = solve(out.g, rhs);
        if (!coeffs) throw std::logic_error("assemble_paneitz_matrix: Gram system unsolvable");
        SphereFunction residual = images[j];
        for (int i = 0; i < k; ++i) residual -= (*coeffs)[i] * basis[i];
        if (!residual.is_zero())
            throw invariance_violation("P(t) V_k is not contained in V_k for k = " +
                                       std::to_string(k) + ", t = " + t.get_str());
    }
    if (!out.a.is_hermitian())
        throw internal_consistency_error("paneitz matrix is not Hermitian");
    return out;
}

// Exact determinant ratio det(A)/det(G): the determinant of the matrix of
// the operator in any orthonormalization of the basis. Real by Hermitian
// symmetry; asserted.
inline Rational exact_det_ratio(const MatrixPair& pair) {
    const GaussianRational da = det_bareiss(pair.a);
    const GaussianRational dg = det_bareiss(pair.g);
    if (!da.is_real() || !dg.is_real())
        throw internal_consistency_error("determinant of a Hermitian matrix must be real");
    if (dg.re <= 0) throw std::domain_error("Gram determinant must be positive");
    return da.re / dg.re;
}

inline int det_sign(const MatrixPair& pair) { return sign(exact_det_ratio(pair)); }

struct SpectrumReport {
    std::vector<double> eigenvalues;  // ascending
    int negative_count = 0;
    int det_sign = 0;
    int kernel_dim = 0;
    Rational exact_det;
};

// Generalized Hermitian eigenvalues of (A, G): exact LDL^* of G, exact
// congruence M = L^{-1} A L^{-*}, then D^{-1/2} scaling and Jacobi at the
// requested precision. negative_count uses the threshold
// eps = 2^{-bits/2} * max |entry|; kernel_dim is the exact rational nullity
// of A. Parity of negative_count is checked against det_sign.
inline SpectrumReport generalized_eigenvalues(const MatrixPair& pair, int bits = 128) {
    if (bits < 8) throw std::invalid_argument("precision too small");
    if (!pair.a.is_hermitian() || !pair.g.is_hermitian())
        throw std::invalid_argument("generalized_eigenvalues: matrices must be Hermitian");
    const size_t n = pair.a.rows();

    const LdlResult ldl = ldlt(pair.g);  // throws if G is not positive definite
    const GMatrix m = congruence_by_unit_lower_inverse(ldl.l, pair.a);

    std::vector<mpf_class> dsqrt(n, mpf_class(0, bits));
    for (size_t i = 0; i < n; ++i) {
        const mpf_class di = to_mpf(ldl.d[i], bits);
        mpf_sqrt(dsqrt[i].get_mpf_t(), di.get_mpf_t());
    }
    std::vector<std::vector<MpComplex>> b(n, std::vector<MpComplex>(n));
    mpf_class max_abs(0, bits);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            const mpf_class den = dsqrt[r] * dsqrt[c];
            b[r][c] = MpComplex{to_mpf(m.at(r, c).re, bits) / den,
                                to_mpf(m.at(r, c).im, bits) / den};
            mpf_class mod2 = b[r][c].abs2();
            if (mod2 > max_abs) max_abs = mod2;
        }
    mpf_sqrt(max_abs.get_mpf_t(), max_abs.get_mpf_t());

    SpectrumReport report;
    const auto eigen = hermitian_eigenvalues(std::move(b), bits);
    mpf_class eps(max_abs);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), static_cast<unsigned long>(bits / 2));
    for (const auto& ev : eigen) {
        report.eigenvalues.push_back(ev.get_d());
        if (ev < -eps) ++report.negative_count;
    }
    report.kernel_dim = static_cast<int>(n - rank(pair.a));
    report.exact_det = exact_det_ratio(pair);
    report.det_sign = sign(report.exact_det);
    if (report.kernel_dim == 0 && ((report.negative_count % 2 == 1) != (report.det_sign == -1)))
        throw internal_consistency_error(
            "negative count parity disagrees with the exact determinant sign");
    return report;
}

// Basis of the total-degree-n space (+)_{p+q=n} H_{p,q}, p descending.
inline std::vector<SphereFunction> degree_block_basis(int n) {
    std::vector<SphereFunction> out;
    for (int p = n; p >= 0; --p) {
        const auto& space = harmonic_basis(p, n - p);
        for (const auto& b : space.basis) {
            SphereFunction f;
            f.add_component(p, n - p, b);
            out.push_back(std::move(f));
        }
    }
    return out;
}

// Matrix pair of Box_b(t) on the degree-n block.
inline MatrixPair kohn_block(const Rational& t, int n) {
    if (n < 0) throw std::invalid_argument("kohn_block: negative degree");
    const RossiGeometry geom = connection_data(t);
    const auto basis = degree_block_basis(n);
    std::vector<SphereFunction> images;
    images.reserve(basis.size());
    for (const auto& e : basis) images.push_back(kohn_laplacian(geom, e));
    MatrixPair out = detail::pair_from_operator(basis, images);
    if (!out.a.is_hermitian())
        throw internal_consistency_error("kohn block is not Hermitian");
    return out;
}

// (N, smallest positive eigenvalue over all degree blocks n <= N) for
// N = 1..max_degree. "Positive" skips the exact kernel of each block
// (rational rank, no numeric threshold).
inline std::vector<std::pair<int, double>> kohn_min_positive(const Rational& t, int max_degree,
                                                             int bits = 128) {
    std::vector<std::pair<int, double>> out;
    double running = 0;
    bool have = false;
    for (int n = 0; n <= max_degree; ++n) {
        const MatrixPair pair = kohn_block(t, n);
        const SpectrumReport rep = generalized_eigenvalues(pair, bits);
        if (rep.kernel_dim < static_cast<int>(rep.eigenvalues.size())) {
            const double smallest_positive = rep.eigenvalues[rep.kernel_dim];
            if (!have || smallest_positive < running) {
                running = smallest_positive;
                have = true;
            }
        }
        if (n >= 1) out.emplace_back(n, have ? running : 0.0);
    }
    return out;
}

struct SweepRow {
    int k = 0;
    Rational t;
    SpectrumReport spectrum;
    bool reproduced = false;  // det_sign == -1 and negative_count == 1
    MatrixPair pair;          // kept for the exact dump on reproduction failure
};

// Rows (k, t) for k = 1..k_max and each t in ts; rows are produced in
// deterministic order regardless of the number of worker threads.
inline std::vector<SweepRow> negative_spectrum_sweep(const std::vector<Rational>& ts, int k_max,
                                                     int bits = 128, int jobs = 1,
                                                     const SeedChoice& choice = {}) {
    if (k_max < 1) throw std::invalid_argument("sweep: kmax must be >= 1");
    for (const auto& t : ts)
        if (t == 0 || t <= -1 || t >= 1)
            throw std::invalid_argument("sweep: t must satisfy 0 < |t| < 1, got " + t.get_str());

    std::vector<SweepRow> rows(ts.size() * static_cast<size_t>(k_max));
    auto run_one = [&](size_t idx) {
        const size_t ti = idx / k_max;
        const int k = static_cast<int>(idx % k_max) + 1;
        SweepRow& row = rows[idx];
        row.k = k;
        row.t = ts[ti];
        row.pair = assemble_paneitz_matrix(k, ts[ti], choice);
        row.spectrum = generalized_eigenvalues(row.pair, bits);
        row.reproduced = row.spectrum.det_sign == -1 && row.spectrum.negative_count == 1;
    };

    if (jobs <= 1) {
        for (size_t idx = 0; idx < rows.size(); ++idx) run_one(idx);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        const int nworkers = std::min<int>(jobs, static_cast<int>(rows.size()));
        workers.reserve(nworkers);
        std::vector<std::exception_ptr> errors(nworkers);
        for (int w = 0; w < nworkers; ++w)
            workers.emplace_back([&, w] {
                try {
                    for (size_t idx = next.fetch_add(1); idx < rows.size();
                         idx = next.fetch_add(1))
                        run_one(idx);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& th : workers) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }
    return rows;
}

}  // namespace crsphere
