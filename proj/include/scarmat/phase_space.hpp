#pragma once

#include <cmath>

namespace scarmat {

// Phase-space point (or chord, or center): components ordered (p, q).
// The symplectic form is J = [[0,-1],[1,0]] so that wedge(a,b) = (Ja).b.
struct PhasePoint {
    double p = 0.0;
    double q = 0.0;

    friend PhasePoint operator+(PhasePoint a, PhasePoint b) { return {a.p + b.p, a.q + b.q}; }
    friend PhasePoint operator-(PhasePoint a, PhasePoint b) { return {a.p - b.p, a.q - b.q}; }
    friend PhasePoint operator*(double s, PhasePoint a) { return {s * a.p, s * a.q}; }
    friend PhasePoint operator-(PhasePoint a) { return {-a.p, -a.q}; }
};

inline double wedge(PhasePoint a, PhasePoint b) { return a.p * b.q - a.q * b.p; }
inline double dot(PhasePoint a, PhasePoint b) { return a.p * b.p + a.q * b.q; }
inline double norm2(PhasePoint a) { return dot(a, a); }

// Reduce both components to [0,1).
inline PhasePoint mod1(PhasePoint x) {
    double p = x.p - std::floor(x.p);
    double q = x.q - std::floor(x.q);
    if (p >= 1.0) p -= 1.0; // floor rounding at the boundary
    if (q >= 1.0) q -= 1.0;
    return {p, q};
}

// Distance on the torus (each component compared mod 1).
inline double torus_dist(PhasePoint a, PhasePoint b) {
    auto d1 = [](double x) {
        double d = std::fabs(x - std::round(x));
        return d;
    };
    return std::sqrt(d1(a.p - b.p) * d1(a.p - b.p) + d1(a.q - b.q) * d1(a.q - b.q));
}

// General real 2x2 matrix acting on (p,q) columns.
struct Mat2 {
    double a11 = 0, a12 = 0, a21 = 0, a22 = 0;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }

    Mat2 transpose() const { return {a11, a21, a12, a22}; }

    friend Mat2 operator+(Mat2 A, Mat2 B) { return {A.a11 + B.a11, A.a12 + B.a12, A.a21 + B.a21, A.a22 + B.a22}; }
    friend Mat2 operator-(Mat2 A, Mat2 B) { return {A.a11 - B.a11, A.a12 - B.a12, A.a21 - B.a21, A.a22 - B.a22}; }
    friend Mat2 operator*(double s, Mat2 A) { return {s * A.a11, s * A.a12, s * A.a21, s * A.a22}; }
    friend Mat2 operator*(Mat2 A, Mat2 B) {
        return {A.a11 * B.a11 + A.a12 * B.a21, A.a11 * B.a12 + A.a12 * B.a22,
                A.a21 * B.a11 + A.a22 * B.a21, A.a21 * B.a12 + A.a22 * B.a22};
    }
    friend PhasePoint operator*(Mat2 A, PhasePoint x) {
        return {A.a11 * x.p + A.a12 * x.q, A.a21 * x.p + A.a22 * x.q};
    }

    Mat2 inverse() const; // throws DegenerateMap when singular

    Mat2 pow(long n) const; // integer power (negative uses inverse)
};

// The symplectic form J and the mirrored form Jtilde = [[0,1],[1,0]].
inline Mat2 symplectic_J() { return {0, -1, 1, 0}; }
inline Mat2 mirror_Jtilde() { return {0, 1, 1, 0}; }

// Real symmetric 2x2 matrix (a quadratic form on phase space or frame coordinates).
struct SymMat2 {
    double xx = 0, xy = 0, yy = 0;

    static SymMat2 zero() { return {0, 0, 0}; }

    double det() const { return xx * yy - xy * xy; }

    // value of the form on a vector with components (u, v)
    double quad(double u, double v) const { return xx * u * u + 2.0 * xy * u * v + yy * v * v; }
    double quad(PhasePoint x) const { return quad(x.p, x.q); }

    Mat2 as_mat2() const { return {xx, xy, xy, yy}; }

    friend SymMat2 operator+(SymMat2 A, SymMat2 B) { return {A.xx + B.xx, A.xy + B.xy, A.yy + B.yy}; }
    friend SymMat2 operator-(SymMat2 A, SymMat2 B) { return {A.xx - B.xx, A.xy - B.xy, A.yy - B.yy}; }
    friend SymMat2 operator*(double s, SymMat2 A) { return {s * A.xx, s * A.xy, s * A.yy}; }
};

// Symmetrized congruence Z^T A Z for a symmetric form A (Z need not be symmetric).
inline SymMat2 congruence(Mat2 Z, SymMat2 A) {
    Mat2 R = Z.transpose() * (A.as_mat2() * Z);
    return {R.a11, 0.5 * (R.a12 + R.a21), R.a22};
}

inline double max_abs_entry(Mat2 A) {
    return std::fmax(std::fmax(std::fabs(A.a11), std::fabs(A.a12)),
                     std::fmax(std::fabs(A.a21), std::fabs(A.a22)));
}

inline double max_abs_entry(SymMat2 A) {
    return std::fmax(std::fabs(A.xx), std::fmax(std::fabs(A.xy), std::fabs(A.yy)));
}

} // namespace scarmat
