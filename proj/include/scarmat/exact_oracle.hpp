#pragma once

#include <optional>
#include <string>

#include "scarmat/dense.hpp"
#include "scarmat/scar_states.hpp"
#include "scarmat/torus_hilbert.hpp"

namespace scarmat {

// One cell of the exact-vs-semiclassical comparison.
struct ComparisonRecord {
    int N = 0;
    int t = 0;
    PhasePoint X1{}, X2{};
    double phi1 = 0, phi2 = 0, T = 0;
    cplx exact{};
    cplx sc{};
    double abs_err = 0; // |exact - sc|
    double rel_err = 0; // abs_err / max(|exact|, 1e-300)
    std::string mode;   // "exactW" or "paperA"

    void finalize() {
        abs_err = std::abs(exact - sc);
        rel_err = abs_err / std::fmax(std::abs(exact), 1e-300);
    }
};

// <X1| U^t |X2> on normalized torus coherent states, by quadruple-precision
// state construction and propagator application. The elements at fixed-point
// pairs cancel down to ~1e-14 of the summand size, which double precision
// cannot resolve; the oracle must stay well below the 1e-8 comparison floor.
cplx coherent_element_exact(const TorusHilbert& h, PhasePoint X1, PhasePoint X2, int t);

// <scar(p1)| U^t |scar(p2)> by explicit vectors.
cplx scar_element_exact(const TorusHilbert& h, const PropagatorPowers& powers,
                        const ScarParams& p1, const ScarParams& p2, int t);

struct NilpotentOrder {
    int k = 0;
    double phase = 0;    // U^k = e^{i phase} * 1
    double residual = 0; // max |U^k - e^{i phase} 1|
};

// Smallest k <= kmax with U^k proportional to the identity within tol.
std::optional<NilpotentOrder> nilpotent_order(const CMatrix& U, int kmax, double tol = 1e-10);

} // namespace scarmat
