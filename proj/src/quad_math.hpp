#pragma once

// Minimal quadruple-precision complex arithmetic for the exact oracle.
// Uses __float128/libquadmath when available, long double otherwise.

#if defined(__SIZEOF_FLOAT128__) && !defined(SCARMAT_NO_FLOAT128)
#include <quadmath.h>
#define SCARMAT_HAVE_FLOAT128 1
#else
#include <cmath>
#define SCARMAT_HAVE_FLOAT128 0
#endif

namespace scarmat::quad {

#if SCARMAT_HAVE_FLOAT128
using real = __float128;
inline real q_exp(real x) { return expq(x); }
inline real q_cos(real x) { return cosq(x); }
inline real q_sin(real x) { return sinq(x); }
inline real q_sqrt(real x) { return sqrtq(x); }
inline real q_fmod(real x, real y) { return fmodq(x, y); }
inline real q_pi() { return M_PIq; }
#else
using real = long double;
inline real q_exp(real x) { return std::exp(x); }
inline real q_cos(real x) { return std::cos(x); }
inline real q_sin(real x) { return std::sin(x); }
inline real q_sqrt(real x) { return std::sqrt(x); }
inline real q_fmod(real x, real y) { return std::fmod(x, y); }
inline real q_pi() { return 3.141592653589793238462643383279502884L; }
#endif

struct complex {
    real re{0}, im{0};

    friend complex operator+(complex a, complex b) { return {a.re + b.re, a.im + b.im}; }
    friend complex operator*(complex a, complex b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend complex operator*(real s, complex a) { return {s * a.re, s * a.im}; }
    complex& operator+=(complex b) {
        re += b.re;
        im += b.im;
        return *this;
    }
    complex conj() const { return {re, -im}; }
    real abs2() const { return re * re + im * im; }
};

inline complex polar1(real phase) { return {q_cos(phase), q_sin(phase)}; }

} // namespace scarmat::quad
