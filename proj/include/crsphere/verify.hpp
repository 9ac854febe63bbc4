// The identity suite: re-checks the structure equations satisfied by a
// RossiGeometry's stored constants and evaluates the commutator, conjugation,
// bracket and Paneitz-route identities on a deterministic pseudo-random
// sample of polynomials. Every residual must be exactly zero; any failure
// names the identity and a witness polynomial.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crsphere/operators.hpp"

namespace crsphere {

struct IdentityCheck {
    std::string name;
    Rational t;
    bool pass = false;
    std::string witness;  // offending sample, empty for structural checks
};

struct VerifyReport {
    std::vector<IdentityCheck> checks;
    std::uint64_t seed = 0;
    int samples = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

// splitmix64: tiny, portable, deterministic
struct SampleRng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t x = (state += 0x9e3779b97f4a7c15ULL);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    long range(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline Polynomial sample_polynomial(SampleRng& rng, int max_degree) {
    Polynomial f;
    const long nterms = rng.range(2, 5);
    for (long k = 0; k < nterms; ++k) {
        Monomial m;
        int budget = max_degree;
        const int picks[4] = {static_cast<int>(rng.range(0, budget)),
                              static_cast<int>(rng.range(0, budget)),
                              static_cast<int>(rng.range(0, budget)),
                              static_cast<int>(rng.range(0, budget))};
        m.a = picks[0];
        budget -= m.a;
        m.b = std::min(picks[1], budget);
        budget -= m.b;
        m.c = std::min(picks[2], budget);
        budget -= m.c;
        m.d = std::min(picks[3], budget);
        Rational re(rng.range(-9, 9), rng.range(1, 9));
        Rational im(rng.range(-9, 9), rng.range(1, 9));
        re.canonicalize();
        im.canonicalize();
        f.add_term(m, GaussianRational(re, im));
    }
    return f;
}

}  // namespace detail

inline VerifyReport verify_structure_equations(const RossiGeometry& g, int nsamples = 20,
                                               std::uint64_t seed = 20240801ULL) {
    VerifyReport report;
    report.seed = seed;
    report.samples = nsamples;
    const GaussianRational i = GaussianRational::i();

    auto structural = [&](const std::string& name, bool ok) {
        report.checks.push_back({name, g.t, ok, ""});
    };

    // --- structural checks against the stored constants ---
    const TwoForm dtheta = exterior_derivative(g.theta);
    structural("reeb-normalization",
               canonicalize(g.theta.pair(g.reeb)) ==
                   canonicalize(poly_one()));
    structural("reeb-contracts-dtheta",
               detail::vanishes_on_sphere(dtheta.pair(g.reeb, g.z1)) &&
                   detail::vanishes_on_sphere(dtheta.pair(g.reeb, g.z1bar)));
    structural("coframe-duality",
               canonicalize(g.theta1.pair(g.z1)) == canonicalize(poly_one()) &&
                   detail::vanishes_on_sphere(g.theta1.pair(g.z1bar)) &&
                   g.theta1.pair(g.reeb).is_zero() && g.theta.pair(g.z1).is_zero());

    {  // d theta = i l theta^1 ^ theta^1b on all frame pairs
        const TwoForm rhs = (i * GaussianRational(g.l)) * wedge(g.theta1, g.theta1bar);
        const TwoForm res = dtheta - rhs;
        structural("levi-form", detail::vanishes_on_sphere(res.pair(g.z1, g.z1bar)) &&
                                    detail::vanishes_on_sphere(res.pair(g.reeb, g.z1)) &&
                                    detail::vanishes_on_sphere(res.pair(g.reeb, g.z1bar)));
    }
    {  // d theta^1 = theta^1 ^ omega + A^1_{1b} theta ^ theta^1b
        const GaussianRational a_up = g.torsion_a11.conj() / GaussianRational(g.l);
        const TwoForm rhs =
            wedge(g.theta1, g.omega * g.theta) + a_up * wedge(g.theta, g.theta1bar);
        const TwoForm res = exterior_derivative(g.theta1) - rhs;
        structural("structure-eq-dtheta1",
                   detail::vanishes_on_sphere(res.pair(g.reeb, g.z1)) &&
                       detail::vanishes_on_sphere(res.pair(g.reeb, g.z1bar)) &&
                       detail::vanishes_on_sphere(res.pair(g.z1, g.z1bar)));
    }
    // d l = omega l + l conj(omega) with l constant
    structural("structure-eq-dl", (g.omega + g.omega.conj()).is_zero());
    {  // curvature: d omega_1^1 = Scal l theta^1 ^ theta^1b modulo theta
        const TwoForm curv = exterior_derivative(g.omega * g.theta);
        const TwoForm rhs =
            GaussianRational(g.scal * g.l) * wedge(g.theta1, g.theta1bar);
        structural("curvature-scal",
                   detail::vanishes_on_sphere((curv - rhs).pair(g.z1, g.z1bar)));
    }
    structural("torsion-deriv-vanishes", g.torsion_a_upbar_deriv.is_zero());

    // --- sampled identities ---
    struct Sampled {
        std::string name;
        bool pass = true;
        std::string witness;
    };
    Sampled identities[5] = {{"commutator-f11b"},
                             {"commutator-f01"},
                             {"conjugate-kohn"},
                             {"bracket-q"},
                             {"paneitz-routes"}};

    detail::SampleRng rng{seed};
    const GaussianRational inv_l{Rational(1) / g.l};
    for (int s = 0; s < nsamples; ++s) {
        const Polynomial raw = detail::sample_polynomial(rng, 6);
        const SphereFunction f = canonicalize(raw);
        const std::string witness = raw.to_text();
        auto fail = [&](int idx) {
            if (identities[idx].pass) {
                identities[idx].pass = false;
                identities[idx].witness = witness;
            }
        };

        // (a) f_{1 1b} - f_{1b 1} = i l f_0
        {
            const SphereFunction lhs = covariant_second(g, f, FrameTag::Z1, FrameTag::Z1Bar) -
                                       covariant_second(g, f, FrameTag::Z1Bar, FrameTag::Z1);
            if (lhs != (i * GaussianRational(g.l)) * reeb_apply(g, f)) fail(0);
        }
        // (b) f_{01} - f_{10} = A_11 f^1 = (A_11 / l) f_{1b}
        {
            const SphereFunction lhs = covariant_second(g, f, FrameTag::Reeb, FrameTag::Z1) -
                                       covariant_second(g, f, FrameTag::Z1, FrameTag::Reeb);
            if (lhs != (g.torsion_a11 * inv_l) * frame_apply(g, FrameTag::Z1Bar, f)) fail(1);
        }
        // (c) BoxBar = Box - i T, against the conjugation route
        {
            const SphereFunction via_rel =
                kohn_laplacian(g, f) - i * reeb_apply(g, f);
            if (via_rel != kohn_laplacian(g, f.conj()).conj()) fail(2);
        }
        // identities (d) and (e) use the relation form of BoxBar so that a
        // corrupted geometry surfaces as a named failure, not an exception
        auto bar_rel = [&](const SphereFunction& x) {
            return kohn_laplacian(g, x) - i * reeb_apply(g, x);
        };
        // (d) [Box, BoxBar] = Q - QBar
        {
            const SphereFunction lhs =
                kohn_laplacian(g, bar_rel(f)) - bar_rel(kohn_laplacian(g, f));
            if (lhs != q_op(g, f) - q_op_bar(g, f)) fail(3);
        }
        // (e) Paneitz route A = route B
        {
            const SphereFunction bar_box_f = bar_rel(kohn_laplacian(g, f));
            const SphereFunction route_a = bar_box_f + q_op(g, f);
            SphereFunction route_b = kohn_laplacian(g, bar_rel(f)) + bar_box_f;
            route_b += q_op(g, f) + q_op_bar(g, f);
            if (route_a != GaussianRational(Rational(1, 2)) * route_b) fail(4);
        }
    }
    for (const auto& s : identities) report.checks.push_back({s.name, g.t, s.pass, s.witness});
    return report;
}

}  // namespace crsphere
