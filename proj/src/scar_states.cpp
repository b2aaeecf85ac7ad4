#include "scarmat/scar_states.hpp"

#include <cmath>
#include <numbers>

#include "scarmat/errors.hpp"

namespace scarmat {

const char* to_string(TConvention c) {
    switch (c) {
        case TConvention::LogN: return "logN";
        case TConvention::LogNOverLambda: return "logN-over-lambda";
        case TConvention::LogInvHbar: return "log-inv-hbar";
    }
    return "?";
}

double ehrenfest_time(int N, double lambda, TConvention conv) {
    switch (conv) {
        case TConvention::LogN: return std::log(double(N));
        case TConvention::LogNOverLambda: return std::log(double(N)) / lambda;
        case TConvention::LogInvHbar: return std::log(2.0 * std::numbers::pi * N);
    }
    return 0.0;
}

double window(double t, double T) {
    double r = 4.0 * t / T;
    return std::exp(-r * r);
}

int default_cutoff(double T) { return int(std::ceil(0.5 * T)) + 2; }

ScarParams make_scar_params(const TorusHilbert& h, double lambda, PhasePoint X, TConvention conv,
                            double phi, bool normalize) {
    ScarParams p;
    p.X = X;
    p.phi = phi;
    p.T = ehrenfest_time(h.N, lambda, conv);
    p.cutoff = default_cutoff(p.T);
    p.normalize = normalize;
    return p;
}

CVector scar_state(const TorusHilbert& h, const PropagatorPowers& powers, const ScarParams& p) {
    if (p.T <= 0) throw Error("scar_state: T must be positive");
    if (p.cutoff < 0) throw Error("scar_state: negative cutoff");

    CVector coh = coherent_state(h, p.X);
    CVector acc = coh;
    dense::scale(acc, window(0.0, p.T));

    CVector fwd = coh, bwd = coh;
    const CMatrix& U = powers.base();
    CMatrix Udag = U.adjoint();
    for (int t = 1; t <= p.cutoff; ++t) {
        fwd = dense::matvec(U, fwd);
        bwd = dense::matvec(Udag, bwd);
        double w = window(double(t), p.T);
        dense::axpy(acc, w * std::polar(1.0, p.phi * t), fwd);
        dense::axpy(acc, w * std::polar(1.0, -p.phi * t), bwd);
    }
    if (p.normalize) dense::scale(acc, 1.0 / dense::norm(acc));
    return acc;
}

} // namespace scarmat
