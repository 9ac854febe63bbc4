// The CR operators of S^3_t acting exactly on functions in canonical sphere
// form: Kohn Laplacian Box_b = -f_{1b}^{ 1b}, its conjugate, the
// sub-Laplacian, the torsion operator Q f = i (A^{1b1b} f_{1b})_{,1b}, the
// CR Paneitz operator P = BoxBar Box + Q, and the components of d^c_CR.
// Operators with two defining expressions compute both and insist on exact
// agreement.
#pragma once

#include "crsphere/geometry.hpp"

namespace crsphere {

struct internal_consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Box_b f = -(1/l) Z_1(t) Z_1b(t) f  (the connection term drops: omega is a
// multiple of theta and the frame is horizontal).
inline SphereFunction kohn_laplacian(const RossiGeometry& g, const SphereFunction& f) {
    const GaussianRational inv_l{Rational(-1) / g.l};
    return inv_l * covariant_second(g, f, FrameTag::Z1Bar, FrameTag::Z1);
}

inline SphereFunction reeb_apply(const RossiGeometry& g, const SphereFunction& f) {
    return frame_apply(g, FrameTag::Reeb, f);
}

// BoxBar_b, computed both as Box_b - i T and as conj . Box_b . conj; the two
// must agree exactly.
inline SphereFunction kohn_laplacian_bar(const RossiGeometry& g, const SphereFunction& f) {
    const SphereFunction via_relation =
        kohn_laplacian(g, f) - GaussianRational::i() * reeb_apply(g, f);
    const SphereFunction via_conjugation = kohn_laplacian(g, f.conj()).conj();
    if (via_relation != via_conjugation)
        throw internal_consistency_error("kohn_laplacian_bar: the two defining routes disagree");
    return via_relation;
}

inline SphereFunction sub_laplacian(const RossiGeometry& g, const SphereFunction& f) {
    return kohn_laplacian(g, f) + kohn_laplacian_bar(g, f);
}

// Q f = i [ (A^{1b1b})_{,1b} f_{1b} + A^{1b1b} f_{1b,1b} ]; the derivative
// term is kept although it vanishes for the Rossi family.
inline SphereFunction q_op(const RossiGeometry& g, const SphereFunction& f) {
    const SphereFunction f1b = frame_apply(g, FrameTag::Z1Bar, f);
    SphereFunction out = g.torsion_a_upbar * covariant_second(g, f, FrameTag::Z1Bar, FrameTag::Z1Bar);
    out += g.torsion_a_upbar_deriv * f1b;
    return GaussianRational::i() * out;
}

inline SphereFunction q_op_bar(const RossiGeometry& g, const SphereFunction& f) {
    return q_op(g, f.conj()).conj();
}

// CR Paneitz operator; route A = BoxBar Box + Q, route B the symmetrized
// (1/2)(Box BoxBar + BoxBar Box + Q + QBar). Exact agreement required.
inline SphereFunction paneitz(const RossiGeometry& g, const SphereFunction& f) {
    const SphereFunction box_f = kohn_laplacian(g, f);
    const SphereFunction boxbar_f = kohn_laplacian_bar(g, f);
    const SphereFunction route_a = kohn_laplacian_bar(g, box_f) + q_op(g, f);
    SphereFunction route_b = kohn_laplacian(g, boxbar_f) + kohn_laplacian_bar(g, box_f);
    route_b += q_op(g, f) + q_op_bar(g, f);
    route_b = GaussianRational(Rational(1, 2)) * route_b;
    if (route_a != route_b)
        throw internal_consistency_error("paneitz: routes A and B disagree");
    return route_a;
}

// Components of d^c_CR u = (i/2)(u_{1b} theta^{1b} - u_1 theta^1) + (1/2)(Delta_b u) theta
// in the admissible coframe. Input must be real-valued.
struct DcCrComponents {
    SphereFunction theta1bar_coeff;  // (i/2) u_{1b}
    SphereFunction theta1_coeff;     // -(i/2) u_1
    SphereFunction theta_coeff;      // (1/2) Delta_b u
};

inline DcCrComponents dc_cr_components(const RossiGeometry& g, const SphereFunction& u) {
    if (!u.is_real())
        throw std::invalid_argument("dc_cr_components: input must be real-valued");
    const GaussianRational half_i{Rational(0), Rational(1, 2)};
    DcCrComponents out;
    out.theta1bar_coeff = half_i * frame_apply(g, FrameTag::Z1Bar, u);
    out.theta1_coeff = -(half_i * frame_apply(g, FrameTag::Z1, u));
    out.theta_coeff = GaussianRational(Rational(1, 2)) * sub_laplacian(g, u);
    return out;
}

// (P_1 u, P_1b u), the theta ^ theta^1 and theta ^ theta^1b coefficients of
// d d^c_CR u, via the covariant-derivative formulas
//   P_1 u  = u_{1b 1}^{ 1b} + i A_11 u^1   = -Z_1(Box_b u)    + (i/l) A_11  Z_1b u
//   P_1b u = u_{1 1b}^{ 1}  - i A_1b1b u^{1b} = -Z_1b(BoxBar_b u) - (i/l) A_1b1b Z_1 u.
inline std::pair<SphereFunction, SphereFunction> paneitz_pair_direct(const RossiGeometry& g,
                                                                     const SphereFunction& u) {
    const GaussianRational i = GaussianRational::i();
    const GaussianRational inv_l{Rational(1) / g.l};
    SphereFunction p1 = -frame_apply(g, FrameTag::Z1, kohn_laplacian(g, u));
    p1 += (i * g.torsion_a11 * inv_l) * frame_apply(g, FrameTag::Z1Bar, u);
    SphereFunction p1b = -frame_apply(g, FrameTag::Z1Bar, kohn_laplacian_bar(g, u));
    p1b -= (i * g.torsion_a11.conj() * inv_l) * frame_apply(g, FrameTag::Z1, u);
    return {p1, p1b};
}

// The same pair read off from the exterior derivative of the coordinate
// representative of d^c_CR u:
//   d d^c_CR u = (P_1 u) theta ^ theta^1 + (P_1b u) theta ^ theta^1b,
// so P_1 u = (d d^c u)(T, Z_1(t)) and P_1b u = (d d^c u)(T, Z_1b(t)); the
// horizontal-horizontal pairing must vanish.
inline std::pair<SphereFunction, SphereFunction> paneitz_pair_from_ddc(const RossiGeometry& g,
                                                                       const SphereFunction& u) {
    const DcCrComponents dc = dc_cr_components(g, u);
    const OneForm dcu = dc.theta1bar_coeff.representative() * g.theta1bar +
                        dc.theta1_coeff.representative() * g.theta1 +
                        dc.theta_coeff.representative() * g.theta;
    const TwoForm ddcu = exterior_derivative(dcu);
    if (!canonicalize(ddcu.pair(g.z1, g.z1bar)).is_zero())
        throw internal_consistency_error("dd^c_CR has a horizontal-horizontal component");
    return {canonicalize(ddcu.pair(g.reeb, g.z1)), canonicalize(ddcu.pair(g.reeb, g.z1bar))};
}

}  // namespace crsphere
