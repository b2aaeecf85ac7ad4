#pragma once

#include "scarmat/phase_space.hpp"

namespace scarmat {

// Coordinates of a vector in the (zeta_u, zeta_s) eigenbasis: x = u*zeta_u + s*zeta_s.
struct FrameCoords {
    double u = 0.0;
    double s = 0.0;
};

// Hyperbolic eigen-frame of a symplectic matrix: Lyapunov exponent per step,
// unit-symplectic stable/unstable vectors (zeta_u ^ zeta_s = 1) and their Gram matrix.
struct HyperbolicFrame {
    double lambda = 0.0;      // > 0
    PhasePoint zeta_u{};      // M zeta_u = e^{+lambda} zeta_u
    PhasePoint zeta_s{};      // M zeta_s = e^{-lambda} zeta_s
    SymMat2 gram{};           // [[zu.zu, zu.zs],[zu.zs, zs.zs]], det = 1

    double d() const { return gram.xy; } // zeta_u . zeta_s
};

// Cayley representation B of a symplectic M: J B = (1-M)(1+M)^{-1}.
// Throws CausticError when |det(M+1)| < 1e-12.
SymMat2 cayley_of(Mat2 M);

// Eigen-frame of a hyperbolic M (|trace| > 2, positive eigenvalue branch).
// Direction fixed by positive q-component (positive p if q = 0), then jointly
// rescaled so that zeta_u ^ zeta_s = 1. Throws NotHyperbolic.
HyperbolicFrame frame_from_map(Mat2 M);

// v = u*zeta_u + s*zeta_s; computed as u = v^zeta_s, s = zeta_u^v.
FrameCoords to_frame_coords(const HyperbolicFrame& f, PhasePoint v);
PhasePoint from_frame_coords(const HyperbolicFrame& f, FrameCoords c);

} // namespace scarmat
