#include "scarmat/symplectic.hpp"

#include <cmath>
#include <string>

#include "scarmat/errors.hpp"

namespace scarmat {

SymMat2 cayley_of(Mat2 M) {
    Mat2 Mp1 = M + Mat2::identity();
    if (std::fabs(Mp1.det()) < 1e-12)
        throw CausticError("cayley_of: det(M+1) = " + std::to_string(Mp1.det()));
    // (1-M) and (1+M)^{-1} commute, so the quotient is unambiguous.
    Mat2 JB = (Mat2::identity() - M) * Mp1.inverse();
    Mat2 B = -1.0 * (symplectic_J() * JB); // J^{-1} = -J
    return {B.a11, 0.5 * (B.a12 + B.a21), B.a22};
}

HyperbolicFrame frame_from_map(Mat2 M) {
    double tr = M.trace();
    if (std::fabs(tr) <= 2.0)
        throw NotHyperbolic("frame_from_map: |trace| = " + std::to_string(std::fabs(tr)));

    // Eigenvalues mu +- with mu+ the larger modulus; for cat maps tr > 2 and both positive.
    double disc = std::sqrt(tr * tr - 4.0);
    double mu_plus = 0.5 * (tr + (tr > 0 ? disc : -disc));
    double mu_minus = 1.0 / mu_plus; // det M = 1

    auto eigvec = [&](double mu) -> PhasePoint {
        // (M - mu) v = 0; pick the more robust row.
        PhasePoint v1{-(M.a12), M.a11 - mu};  // from row 1: (a11-mu) p + a12 q = 0
        PhasePoint v2{-(M.a22 - mu), M.a21};  // from row 2: a21 p + (a22-mu) q = 0
        PhasePoint v = norm2(v1) >= norm2(v2) ? v1 : v2;
        // deterministic orientation: positive q-component (positive p if q = 0)
        if (v.q < 0 || (v.q == 0 && v.p < 0)) v = -v;
        return v;
    };

    PhasePoint vu = eigvec(mu_plus);
    PhasePoint vs = eigvec(mu_minus);

    // Scale fixing: zeta_s is unit length, zeta_u then absorbs the wedge
    // normalization zeta_u ^ zeta_s = 1.
    vs = (1.0 / std::sqrt(norm2(vs))) * vs;
    double w = wedge(vu, vs);
    if (std::fabs(w) < 1e-14)
        throw NotHyperbolic("frame_from_map: eigenvectors are parallel");
    vu = (1.0 / w) * vu;

    HyperbolicFrame f;
    f.lambda = std::log(std::fabs(mu_plus));
    f.zeta_u = vu;
    f.zeta_s = vs;
    f.gram = SymMat2{dot(vu, vu), dot(vu, vs), dot(vs, vs)};
    return f;
}

FrameCoords to_frame_coords(const HyperbolicFrame& f, PhasePoint v) {
    return {wedge(v, f.zeta_s), wedge(f.zeta_u, v)};
}

PhasePoint from_frame_coords(const HyperbolicFrame& f, FrameCoords c) {
    return c.u * f.zeta_u + c.s * f.zeta_s;
}

} // namespace scarmat
