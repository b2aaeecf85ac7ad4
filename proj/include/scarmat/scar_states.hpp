#pragma once

#include "scarmat/phase_space.hpp"
#include "scarmat/torus_hilbert.hpp"

namespace scarmat {

// Ehrenfest-time conventions. The map-side reading of T = ln hbar is not unique;
// all three are selectable and the comparison report states which was used.
enum class TConvention {
    LogN,           // ln N
    LogNOverLambda, // ln(N)/lambda   (default)
    LogInvHbar,     // ln(2 pi N)
};

const char* to_string(TConvention c);

double ehrenfest_time(int N, double lambda, TConvention conv);

// Gaussian time window f_T(t) = exp[-(4t/T)^2].
double window(double t, double T);

// smallest integer >= T/2 + 2 (window <= e^{-4} beyond T/2)
int default_cutoff(double T);

// Construction data for one scar state.
struct ScarParams {
    PhasePoint X{};       // periodic point of the classical map
    double phi = 0.0;     // scar phase
    double T = 0.0;       // Ehrenfest time, map steps
    int cutoff = 0;       // max |t| in the time sum
    bool normalize = true;
};

ScarParams make_scar_params(const TorusHilbert& h, double lambda, PhasePoint X,
                            TConvention conv = TConvention::LogNOverLambda, double phi = 0.0,
                            bool normalize = true);

// |scar> = sum_{t=-cutoff}^{cutoff} e^{i phi t} f_T(t) U^t |X>.
CVector scar_state(const TorusHilbert& h, const PropagatorPowers& powers, const ScarParams& p);

} // namespace scarmat
