// Bigraded spherical harmonics on S^3. Exact L^2 pairing with the
// probability measure (total mass 1), harmonic decomposition of arbitrary
// polynomials, and the canonical representative of a polynomial restricted
// to the sphere: P_{p,q} splits as (+)_j |zeta|^{2j} H_{p-j,q-j} and
// |zeta|^2 restricts to 1.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crsphere/linalg.hpp"
#include "crsphere/polynomial.hpp"

namespace crsphere {

inline const Integer& factorial(int n) {
    static std::vector<Integer> cache{Integer(1)};
    static std::mutex mu;
    std::lock_guard lock(mu);
    while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * Integer(cache.size()));
    return cache[n];
}

// Integral of z^a w^b zb^c wb^d over S^3, normalized so the constant 1
// integrates to 1. Zero unless a=c and b=d (rotation symmetry), otherwise
// a! b! / (a+b+1)!.
inline Rational monomial_integral(int a, int b, int c, int d) {
    if (a < 0 || b < 0 || c < 0 || d < 0) throw std::invalid_argument("negative exponent");
    if (a != c || b != d) return Rational(0);
    Rational r(factorial(a) * factorial(b), factorial(a + b + 1));
    r.canonicalize();
    return r;
}

// Sesquilinear pairing <f,g> = integral of f * conj(g).
inline GaussianRational inner_product(const Polynomial& f, const Polynomial& g) {
    GaussianRational total;
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            const int a = mf.a + mg.c, b = mf.b + mg.d;
            const int c = mf.c + mg.a, d = mf.d + mg.b;
            if (a != c || b != d) continue;
            total += cf * cg.conj() * GaussianRational(monomial_integral(a, b, c, d));
        }
    }
    return total;
}

// Flat Laplacian on C^2 = R^4: 4 (d_z d_zb + d_w d_wb).
inline Polynomial flat_laplacian(const Polynomial& f) {
    Polynomial h = f.derive(Var::Z).derive(Var::Zb) + f.derive(Var::W).derive(Var::Wb);
    return GaussianRational(4) * h;
}

namespace detail {

// Monomial basis of P_{p,q}, graded-lex ordered (deterministic).
inline std::vector<Monomial> pq_monomials(int p, int q) {
    std::vector<Monomial> out;
    for (int a = 0; a <= p; ++a)
        for (int c = 0; c <= q; ++c) out.push_back({a, p - a, c, q - c});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

struct HarmonicSpace {
    int p = 0, q = 0;
    std::vector<Polynomial> basis;  // exactly p+q+1 independent harmonics
};

// Exact kernel of the flat Laplacian on P_{p,q}, computed once per (p,q)
// and cached; deterministic across runs and threads.
inline const HarmonicSpace& harmonic_basis(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("harmonic_basis: negative bidegree");
    static std::map<std::pair<int, int>, std::unique_ptr<HarmonicSpace>> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto& slot = cache[{p, q}];
    if (slot) return *slot;

    auto space = std::make_unique<HarmonicSpace>();
    space->p = p;
    space->q = q;
    const auto monos = detail::pq_monomials(p, q);
    if (p == 0 || q == 0) {
        // pure bidegrees are harmonic outright
        for (const auto& m : monos) space->basis.push_back(Polynomial::monomial(m));
    } else {
        const auto target = detail::pq_monomials(p - 1, q - 1);
        std::map<Monomial, size_t> tindex;
        for (size_t i = 0; i < target.size(); ++i) tindex.emplace(target[i], i);
        GMatrix lap(target.size(), monos.size());
        for (size_t j = 0; j < monos.size(); ++j) {
            const Polynomial img = flat_laplacian(Polynomial::monomial(monos[j]));
            for (const auto& [m, c] : img.terms()) lap.at(tindex.at(m), j) = c;
        }
        for (const auto& vec : null_space(lap)) {
            Polynomial b;
            for (size_t i = 0; i < monos.size(); ++i) b.add_term(monos[i], vec[i]);
            space->basis.push_back(std::move(b));
        }
    }
    if (static_cast<int>(space->basis.size()) != p + q + 1)
        throw std::logic_error("harmonic_basis: dimension is not p+q+1");
    slot = std::move(space);
    return *slot;
}

// A function on S^3 in canonical form: one harmonic component per bidegree.
class SphereFunction {
  public:
    using ComponentMap = std::map<std::pair<int, int>, Polynomial>;

    SphereFunction() = default;

    static SphereFunction zero() { return {}; }

    const ComponentMap& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    Polynomial component(int p, int q) const {
        auto it = comps_.find({p, q});
        return it == comps_.end() ? Polynomial::zero() : it->second;
    }

    void add_component(int p, int q, const Polynomial& poly) {
        if (poly.is_zero()) return;
        auto [it, inserted] = comps_.emplace(std::pair{p, q}, poly);
        if (!inserted) {
            it->second += poly;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    friend SphereFunction operator+(const SphereFunction& f, const SphereFunction& g) {
        SphereFunction h = f;
        for (const auto& [pq, poly] : g.comps_) h.add_component(pq.first, pq.second, poly);
        return h;
    }
    friend SphereFunction operator-(const SphereFunction& f, const SphereFunction& g) {
        SphereFunction h = f;
        for (const auto& [pq, poly] : g.comps_) h.add_component(pq.first, pq.second, -poly);
        return h;
    }
    SphereFunction operator-() const {
        SphereFunction h;
        for (const auto& [pq, poly] : comps_) h.comps_.emplace(pq, -poly);
        return h;
    }
    friend SphereFunction operator*(const GaussianRational& c, const SphereFunction& f) {
        SphereFunction h;
        if (c.is_zero()) return h;
        for (const auto& [pq, poly] : f.comps_) h.comps_.emplace(pq, c * poly);
        return h;
    }
    SphereFunction& operator+=(const SphereFunction& g) { return *this = *this + g; }
    SphereFunction& operator-=(const SphereFunction& g) { return *this = *this - g; }

    friend bool operator==(const SphereFunction& f, const SphereFunction& g) = default;

    SphereFunction conj() const {
        SphereFunction h;
        for (const auto& [pq, poly] : comps_)
            h.comps_.emplace(std::pair{pq.second, pq.first}, poly.conj());
        return h;
    }

    bool is_real() const { return *this == conj(); }

    // A harmonic polynomial representing the function on S^3.
    Polynomial representative() const {
        Polynomial sum;
        for (const auto& [pq, poly] : comps_) sum += poly;
        return sum;
    }

    // Pairing against an arbitrary polynomial, component by component.
    GaussianRational pair_polynomial(const Polynomial& g) const {
        GaussianRational total;
        for (const auto& [pq, poly] : comps_) total += inner_product(poly, g);
        return total;
    }

  private:
    ComponentMap comps_;
};

// Components at distinct bidegrees are L^2-orthogonal, so the pairing is the
// sum over matching bidegrees.
inline GaussianRational inner_product(const SphereFunction& f, const SphereFunction& g) {
    GaussianRational total;
    for (const auto& [pq, poly] : f.components()) {
        const Polynomial other = g.component(pq.first, pq.second);
        if (!other.is_zero()) total += inner_product(poly, other);
    }
    return total;
}

inline Rational norm_square(const SphereFunction& f) {
    const GaussianRational n = inner_product(f, f);
    if (n.im != 0) throw std::logic_error("norm_square: pairing is not real");
    return n.re;
}

namespace detail {

// f in P_{p,q} as a tower f = sum_j |zeta|^{2j} h_j with h_j in H_{p-j,q-j}.
// Uses Delta(|zeta|^{2j} h) = 4j(deg h + j + 1) |zeta|^{2(j-1)} h on R^4 to
// peel levels off the Laplacian of f; exact, no linear solves.
inline std::vector<Polynomial> harmonic_tower(const Polynomial& f, int p, int q) {
    if (f.is_zero()) return {};
    const Polynomial lap = flat_laplacian(f);
    if (lap.is_zero()) return {f};
    const auto inner = harmonic_tower(lap, p - 1, q - 1);
    std::vector<Polynomial> tower(inner.size() + 1);
    const Polynomial r2 = sphere_radius_square();
    Polynomial head = f;
    Polynomial r2j = r2;
    for (size_t j = 1; j <= inner.size(); ++j) {
        const long denom = 4L * static_cast<long>(j) * (p + q - static_cast<long>(j) + 1);
        tower[j] = GaussianRational(Rational(1, denom)) * inner[j - 1];
        head -= r2j * tower[j];
        r2j = r2j * r2;
    }
    if (!flat_laplacian(head).is_zero())
        throw std::logic_error("harmonic_tower: head failed harmonicity");
    tower[0] = std::move(head);
    return tower;
}

}  // namespace detail

// Restriction of a polynomial to S^3 in canonical form. A projection at the
// level of represented functions: canonical forms are fixed points.
inline SphereFunction canonicalize(const Polynomial& f) {
    SphereFunction out;
    for (const auto& [pq, part] : f.bidegree_split()) {
        const auto tower = detail::harmonic_tower(part, pq.first, pq.second);
        for (size_t j = 0; j < tower.size(); ++j)
            out.add_component(pq.first - static_cast<int>(j), pq.second - static_cast<int>(j),
                              tower[j]);
    }
    return out;
}

inline Polynomial harmonic_project(const SphereFunction& f, int p, int q) {
    return f.component(p, q);
}

}  // namespace crsphere
