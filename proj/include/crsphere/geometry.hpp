// Pseudo-Hermitian geometry of the Rossi spheres S^3_t. The CR structure is
// spanned by Z_1(t) = Z_1 + t Z_1b with Z_1 = wb d/dz - zb d/dw, against the
// round contact form theta. The Tanaka-Webster connection data (Levi factor,
// connection one-form coefficient, torsion, scalar curvature) is not assumed:
// it is solved for symbolically from the structure equations by pairing exact
// exterior-calculus forms with the admissible frame, and validated again by
// verify_structure_equations before use.
#pragma once

#include <stdexcept>

#include "crsphere/forms.hpp"
#include "crsphere/harmonics.hpp"

namespace crsphere {

enum class FrameTag { Z1, Z1Bar, Reeb };

struct RossiGeometry {
    Rational t;             // CR deformation parameter, |t| < 1
    Rational l;             // Levi coefficient l_{1,1b}(t) = 1 - t^2
    GaussianRational omega;        // omega_1^1(t) = omega * theta
    GaussianRational torsion_a11;  // A_{11}(t)
    GaussianRational torsion_a_upbar;        // A^{1b 1b}(t)
    GaussianRational torsion_a_upbar_deriv;  // (A^{1b 1b})_{,1b}; vanishes for this family
    Rational scal;          // Tanaka-Webster scalar curvature

    VectorField z1, z1bar, reeb;
    OneForm theta, theta1, theta1bar;  // admissible coframe dual to (reeb, z1, z1bar)

    const VectorField& frame(FrameTag tag) const {
        switch (tag) {
            case FrameTag::Z1: return z1;
            case FrameTag::Z1Bar: return z1bar;
            default: return reeb;
        }
    }
};

namespace detail {

// the constant value of a polynomial that must be constant on S^3
inline GaussianRational constant_on_sphere(const Polynomial& poly) {
    const SphereFunction f = canonicalize(poly);
    GaussianRational value;
    for (const auto& [pq, comp] : f.components()) {
        if (pq != std::pair<int, int>{0, 0})
            throw std::logic_error("expected a constant on S^3, got " + poly.to_text());
        value = comp.coefficient(Monomial{});
    }
    return value;
}

inline bool vanishes_on_sphere(const Polynomial& poly) {
    return canonicalize(poly).is_zero();
}

}  // namespace detail

// Frame and coframe of the standard sphere.
inline VectorField standard_z1() {
    VectorField x;
    x.coeff[0] = poly_wb();
    x.coeff[1] = -poly_zb();
    return x;
}

// T = i (z d/dz + w d/dw - zb d/dzb - wb d/dwb); validated below against
// theta(T) = 1 and T _| dtheta = 0.
inline VectorField reeb_field() {
    const GaussianRational i = GaussianRational::i();
    VectorField x;
    x.coeff[0] = i * poly_z();
    x.coeff[1] = i * poly_w();
    x.coeff[2] = -i * poly_zb();
    x.coeff[3] = -i * poly_wb();
    return x;
}

// theta = (i/2)(z dzb + w dwb - zb dz - wb dw)
inline OneForm contact_form() {
    const GaussianRational half_i{Rational(0), Rational(1, 2)};
    OneForm f;
    f.coeff[0] = -half_i * poly_zb();
    f.coeff[1] = -half_i * poly_wb();
    f.coeff[2] = half_i * poly_z();
    f.coeff[3] = half_i * poly_w();
    return f;
}

// theta^1 = w dz - z dw, dual to Z_1 on S^3
inline OneForm standard_theta1() {
    OneForm f;
    f.coeff[0] = poly_w();
    f.coeff[1] = -poly_z();
    return f;
}

// Builds the geometry of S^3_t and solves the structure equations
//   d theta   = i l theta^1(t) ^ theta^1b(t)
//   d theta^1(t) = theta^1(t) ^ omega + A^1_{1b} theta ^ theta^1b(t)
//   d omega   = Scal l theta^1(t) ^ theta^1b(t)   (mod theta)
// for l, omega, the torsion and Scal. Throws std::domain_error when
// |t| >= 1 (the Levi form 1 - t^2 > 0 fails: not strictly pseudoconvex),
// std::logic_error if any derived quantity fails its defining equation.
inline RossiGeometry connection_data(const Rational& t) {
    if (t <= -1 || t >= 1)
        throw std::domain_error("connection_data: |t| < 1 required (1 - t^2 > 0 fails: t = " +
                                t.get_str() + " is not strictly pseudoconvex)");

    RossiGeometry g;
    g.t = t;

    const VectorField z1std = standard_z1();
    const VectorField z1bstd = z1std.conj();
    g.z1 = z1std + GaussianRational(t) * z1bstd;
    g.z1bar = g.z1.conj();
    g.reeb = reeb_field();
    g.theta = contact_form();

    const GaussianRational i = GaussianRational::i();
    const Polynomial r2 = sphere_radius_square();

    // Reeb defining properties and tangency of the frame
    const TwoForm dtheta = exterior_derivative(g.theta);
    if (detail::constant_on_sphere(g.theta.pair(g.reeb)) != GaussianRational(1))
        throw std::logic_error("reeb: theta(T) != 1");
    if (!detail::vanishes_on_sphere(dtheta.pair(g.reeb, g.z1)) ||
        !detail::vanishes_on_sphere(dtheta.pair(g.reeb, g.z1bar)))
        throw std::logic_error("reeb: T does not annihilate dtheta");
    if (!g.theta.pair(g.z1).is_zero() || !g.theta.pair(g.z1bar).is_zero())
        throw std::logic_error("frame: Z_1(t) is not horizontal");
    for (const auto* x : {&g.z1, &g.z1bar, &g.reeb})
        if (!x->apply(r2).is_zero())
            throw std::logic_error("frame: field does not annihilate |zeta|^2");

    // admissible coframe: theta^1(t) = (theta^1 - t theta^1b) / (1 - t^2)
    const OneForm theta1std = standard_theta1();
    const OneForm theta1bstd = theta1std.conj();
    const Rational levi_ref = 1 - t * t;
    const GaussianRational inv_l{Rational(1) / levi_ref};
    g.theta1 = inv_l * (theta1std - GaussianRational(t) * theta1bstd);
    g.theta1bar = g.theta1.conj();
    if (detail::constant_on_sphere(g.theta1.pair(g.z1)) != GaussianRational(1) ||
        !detail::vanishes_on_sphere(g.theta1.pair(g.z1bar)) ||
        !g.theta1.pair(g.reeb).is_zero())
        throw std::logic_error("coframe: theta^1(t) is not dual to the frame");

    // Levi coefficient from d theta = i l theta^1 ^ theta^1b
    const GaussianRational levi =
        detail::constant_on_sphere(dtheta.pair(g.z1, g.z1bar)) / i;
    if (!levi.is_real() || levi.re <= 0)
        throw std::logic_error("levi coefficient is not a positive real");
    g.l = levi.re;

    // connection coefficient and torsion from d theta^1(t):
    //   pairing with (T, Z_1(t)) gives -omega, with (T, Z_1b(t)) gives A^1_{1b},
    //   and the (Z_1(t), Z_1b(t)) pairing must vanish.
    const TwoForm dtheta1 = exterior_derivative(g.theta1);
    g.omega = -detail::constant_on_sphere(dtheta1.pair(g.reeb, g.z1));
    const GaussianRational a_up1_lowbar =
        detail::constant_on_sphere(dtheta1.pair(g.reeb, g.z1bar));
    if (!detail::vanishes_on_sphere(dtheta1.pair(g.z1, g.z1bar)))
        throw std::logic_error("structure equation: H x H component of dtheta^1 nonzero");
    if (g.omega.conj() != -g.omega)
        throw std::logic_error("omega is not purely imaginary");

    const GaussianRational a_lowbarbar = GaussianRational(g.l) * a_up1_lowbar;
    g.torsion_a11 = a_lowbarbar.conj();
    g.torsion_a_upbar = g.torsion_a11 / GaussianRational(g.l * g.l);

    // (A^{1b1b})_{,1b} = Z_1b(t)(A^{1b1b}) + 2 conj(omega) theta(Z_1b(t)) A^{1b1b}:
    // both terms vanish (constant torsion, horizontal frame); kept as a stored
    // general term and asserted zero.
    g.torsion_a_upbar_deriv =
        detail::constant_on_sphere(g.theta.pair(g.z1bar)) * GaussianRational(2) *
        g.omega.conj() * g.torsion_a_upbar;
    if (!g.torsion_a_upbar_deriv.is_zero())
        throw std::logic_error("torsion covariant derivative does not vanish");

    // scalar curvature from the curvature form d omega_1^1 mod theta
    const TwoForm curvature = exterior_derivative(g.omega * g.theta);
    const GaussianRational scal_l =
        detail::constant_on_sphere(curvature.pair(g.z1, g.z1bar)) / GaussianRational(g.l);
    if (!scal_l.is_real())
        throw std::logic_error("scalar curvature is not real");
    g.scal = scal_l.re;
    if (g.scal <= 0) throw std::logic_error("scalar curvature is not positive");

    // d l = omega l + l conj(omega): l constant, so omega + conj(omega) = 0
    if (!(g.omega + g.omega.conj()).is_zero())
        throw std::logic_error("structure equation for d l fails");

    return g;
}

// Applies a frame field to a function on S^3. Well defined because every
// frame field annihilates |zeta|^2; the result is canonicalized.
inline SphereFunction frame_apply(const RossiGeometry& g, FrameTag tag, const SphereFunction& f) {
    const VectorField& x = g.frame(tag);
    SphereFunction out;
    for (const auto& [pq, comp] : f.components()) out += canonicalize(x.apply(comp));
    return out;
}

// Second covariant derivative component f_{ab}: differentiate f_a along the
// frame field of b and subtract the connection correction, which is nonzero
// only when b is the Reeb direction (omega is a multiple of theta):
//   f_{ab} = Z_b(f_a) - omega_a(Z_b) f_a,  omega_1 = omega, omega_1b = conj(omega).
inline SphereFunction covariant_second(const RossiGeometry& g, const SphereFunction& f,
                                       FrameTag first, FrameTag second) {
    const SphereFunction fa = frame_apply(g, first, f);
    SphereFunction out = frame_apply(g, second, fa);
    if (second == FrameTag::Reeb && first != FrameTag::Reeb) {
        const GaussianRational coeff = (first == FrameTag::Z1) ? g.omega : g.omega.conj();
        out -= coeff * fa;
    }
    return out;
}

}  // namespace crsphere
