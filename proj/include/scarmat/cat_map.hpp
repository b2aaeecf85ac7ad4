#pragma once

#include <vector>

#include "scarmat/phase_space.hpp"
#include "scarmat/symplectic.hpp"

namespace scarmat {

// Winding numbers: x_+ = M x_- - m on the unfolded plane.
struct Winding {
    long mp = 0;
    long mq = 0;
};

// One quantizable cat map: integer symplectic M, its Cayley form B, hyperbolic frame.
struct CatMapSpec {
    Mat2 M;
    SymMat2 B;
    HyperbolicFrame frame;
    int morse_alpha = 0; // per-step Morse index; 0 for this hyperbolic family
};

// M = [[2,3],[1,2]], B = diag(-1/3, 1).
CatMapSpec default_cat();

CatMapSpec make_cat(Mat2 M);

// n-fold application of the map mod 1 (negative n uses the inverse map).
PhasePoint iterate(const CatMapSpec& spec, PhasePoint x, long n);

// x_l = (M^l - 1)^{-1} m reduced mod 1. Throws DegenerateMap if det(M^l-1) = 0.
PhasePoint periodic_point(const CatMapSpec& spec, long l, Winding m);

// All points of period dividing l, by complete enumeration of admissible windings.
std::vector<PhasePoint> periodic_points(const CatMapSpec& spec, long l);

// Center generating function S(x, m) = xBx + x(B-J)m + (1/4) m(B+Jt)m.
double generating_action(const CatMapSpec& spec, PhasePoint x, Winding m);

// Chord through center x on branch m: xi = -J dS/dx = 2(M+1)^{-1}[(M-1)x - m].
PhasePoint chord_at(const CatMapSpec& spec, PhasePoint x, Winding m);

// Winding of a fixed point: m = (M-1)X (X must be fixed mod 1 within tol).
Winding fixed_point_winding(const CatMapSpec& spec, PhasePoint X);

// Per-step action at a fixed point, S(X, (M-1)X). Throws NotPeriodic.
double fixed_point_action(const CatMapSpec& spec, PhasePoint X);

bool is_fixed_point(const CatMapSpec& spec, PhasePoint X, double tol = 1e-10);

} // namespace scarmat
