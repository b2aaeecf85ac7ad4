#pragma once

#include <functional>
#include <vector>

#include "scarmat/cat_map.hpp"
#include "scarmat/dense.hpp"
#include "scarmat/scar_states.hpp"
#include "scarmat/symplectic.hpp"
#include "scarmat/torus_hilbert.hpp"

namespace scarmat {

// Time-dependent matrix chain in the stable/unstable basis. All symmetric
// matrices are quadratic forms on frame coordinates (u, s).
struct LinearizedChain {
    double t = 0;
    double tau = 0;        // tanh(t lambda / 2)
    SymMat2 B{};           // Cayley form, [[0,tau],[tau,0]]
    double detV_mod = 1;   // |det V_t|, det V = 1 + tau^2 + 2 i d tau
    double epsilon = 0;    // arg det V_t, atan2(2 d tau, 1 + tau^2)
    SymMat2 Cbar{};        // Re of J' V^{-1} J
    SymMat2 Bbar{};        // -Im of J' V^{-1} J
    SymMat2 D{};           // (M^t+1)^{-T} Bbar (M^t+1)^{-1}
    SymMat2 E{};           // (M^t+1)^{-T} Cbar (M^t+1)^{-1}
    double detM1 = 4;      // |det(M^t + 1)| = 4 cosh^2(t lambda/2)
};

// Closed forms for any real t.
LinearizedChain chain_at(const HyperbolicFrame& f, double t);

// delta = -(M^t+1)^{-1} xi0 in frame coordinates.
FrameCoords point_shift(const HyperbolicFrame& f, double t, FrameCoords xi0);

// S-tilde = t (S_fp + hbar (pi/2) alpha) + (1/4) xi0' B_t xi0.
double action_mid(double S_fp, const LinearizedChain& chain, FrameCoords xi0, double t, int alpha,
                  double hbar);

// Engine-wide conventions.
struct ScEngineConfig {
    // Phase of the quantized propagator per map step relative to the Van Vleck
    // branch of the semiclassical machinery. The Hannay-Berry (i/N)^{1/2} kernel
    // sits at +pi/2; the acceptance harness re-fits and reports this per N.
    double propagator_phase = 1.5707963267948966;
    PhasePoint chi{0.0, 0.0}; // torus boundary-condition angles in the periodization phase
    double nsigma = 8.0;      // image-selection radius in Gaussian sigmas
};

// Single-branch plane element, linearized around the fixed point that anchors S_fp:
//   2 exp[-xi'E xi/hbar] exp{i([t S_tilde-part + xi'(B/4 + D)xi - X1^X2/2]/hbar - eps/2)}
//     / sqrt(|det V| |det(M^t+1)|)
// with xi = X1 - X2 in frame coordinates.
cplx coherent_sc_element_plane(const HyperbolicFrame& f, double t, PhasePoint X1, PhasePoint X2,
                               double S_fp, int alpha, double hbar);

// Phase-weighted image sum over integer translations of the ket, |k| <= kmax box:
//   sqrt(N/2) sum_k exp[2 pi i chi^k] exp[i pi N kp kq] exp[-i pi N X2^k] elem(X1, X2+k).
cplx torus_periodize(const std::function<cplx(PhasePoint, PhasePoint)>& elem, PhasePoint X1,
                     PhasePoint X2, int kmax, const TorusHilbert& h, PhasePoint chi = {0.0, 0.0});

// Image list with non-negligible Gaussian damping at chain c (strip enumeration).
std::vector<std::pair<long, long>> periodization_images(const HyperbolicFrame& f,
                                                        const LinearizedChain& c, double hbar,
                                                        PhasePoint X1, PhasePoint X2,
                                                        double nsigma);

// Periodized coherent SC element at integer time t, including the propagator
// phase convention e^{i theta t}. Exact for the quantized cat map.
cplx sc_coherent_torus(const TorusHilbert& h, const CatMapSpec& spec, int t, PhasePoint X1,
                       PhasePoint X2, double S_fp, const ScEngineConfig& cfg = {});

// diagonal t=0 periodized element; the SC-side norm^2 of a coherent state
double sc_coherent_norm2(const TorusHilbert& h, const CatMapSpec& spec, PhasePoint X,
                         const ScEngineConfig& cfg = {});

// A = T sqrt(pi/2) exp[-T^2 (phi2-phi1)^2 / 32].
double amplitude_A(double T, double phi1, double phi2);

// Exact discrete collapse of the double time sum:
//   W(t, tR) = sum_{|t1|<=cutoff, t2 = tR-t+t1, |t2|<=cutoff}
//              e^{i(phi2 t2 - phi1 t1)} f_T(t1) f_T(t2).
cplx discrete_window_weight(int t, int tR, double phi1, double phi2, double T, int cutoff);

enum class ScMode { PaperA, ExactW };

const char* to_string(ScMode m);

// Per-time-step record of the classical ingredients feeding the SC sum.
struct ScTermRecord {
    int tprime = 0;
    LinearizedChain chain;
    FrameCoords delta{};    // point shift of the principal (k=0) image
    double action_mid = 0;  // S-tilde of the principal image
    double gauss_damp = 0;  // sum over images of exp[-xi'E xi/hbar]
    double phase = 0;       // phase of the principal image term
    cplx term;              // periodized kernel at t' (no window weight, no sqrt(N/2))
    cplx weight;            // window weight applied to this t'
    int n_images = 0;
};

struct ScarScResult {
    cplx value;  // normalized when both ScarParams ask for it
    cplx raw;
    double norm1 = 1, norm2 = 1;
    std::vector<ScTermRecord> breakdown;
};

// Semiclassical scar-basis matrix element <scar(p1)| U^t |scar(p2)>.
// ExactW: exact discrete window collapse; PaperA: continuum-integral prefactor A
// with the Gaussian weight of the printed recipe, kernel cut at |t-t'| > T.
ScarScResult scar_sc_element(const TorusHilbert& h, const CatMapSpec& spec, const ScarParams& p1,
                             const ScarParams& p2, int t, ScMode mode,
                             const ScEngineConfig& cfg = {});

} // namespace scarmat
