#include "scarmat/sc_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scarmat/errors.hpp"

namespace scarmat {

namespace {
constexpr double kPi = std::numbers::pi;

// exp[i pi m] for integer m without trig
inline double int_pi_sign(long long m) { return (m % 2 == 0) ? 1.0 : -1.0; }
} // namespace

LinearizedChain chain_at(const HyperbolicFrame& f, double t) {
    const double lam = f.lambda;
    const double d = f.d();
    const double zu2 = f.gram.xx;
    const double zs2 = f.gram.yy;

    LinearizedChain c;
    c.t = t;
    const double tau = std::tanh(0.5 * t * lam);
    const double ch = std::cosh(0.5 * t * lam);
    const double tau2p1 = 1.0 + tau * tau;
    c.tau = tau;
    c.B = SymMat2{0.0, tau, 0.0};
    c.detM1 = 4.0 * ch * ch;

    // det V = 1 + tau^2 + 2 i d tau
    const double re = tau2p1, im = 2.0 * d * tau;
    c.detV_mod = std::hypot(re, im);
    c.epsilon = std::atan2(im, re);

    const double mod2 = c.detV_mod * c.detV_mod;
    c.Cbar = (1.0 / mod2) * (tau2p1 * f.gram - (2.0 * d * tau) * c.B);
    c.Bbar = (1.0 / mod2) * (tau2p1 * c.B + (2.0 * d * tau) * f.gram);

    // conjugation by (M^t+1)^{-1} = diag(e^{-tl/2}, e^{tl/2})/(2 cosh(tl/2))
    const double det1 = c.detM1 * mod2;
    const double em = std::exp(-t * lam), ep = std::exp(t * lam);
    c.D = SymMat2{2.0 * zu2 * d * tau * em / det1, tau * (tau2p1 + 2.0 * d * d) / det1,
                  2.0 * zs2 * d * tau * ep / det1};
    c.E = SymMat2{zu2 * tau2p1 * em / det1, d * (1.0 - tau * tau) / det1,
                  zs2 * tau2p1 * ep / det1};
    return c;
}

FrameCoords point_shift(const HyperbolicFrame& f, double t, FrameCoords xi0) {
    const double lam = f.lambda;
    const double ch2 = 2.0 * std::cosh(0.5 * t * lam);
    return {-std::exp(-0.5 * t * lam) * xi0.u / ch2, -std::exp(0.5 * t * lam) * xi0.s / ch2};
}

double action_mid(double S_fp, const LinearizedChain& chain, FrameCoords xi0, double t, int alpha,
                  double hbar) {
    return t * (S_fp + hbar * 0.5 * kPi * alpha) + 0.25 * chain.B.quad(xi0.u, xi0.s);
}

namespace {

// Phase and damping of one plane branch element, split so that large rational
// multiples of 2 pi never reach the trig calls. Returns the element value.
// The reduced action t*S_fp enters as exp[2 pi i N t S_fp]; N t S_fp is reduced
// mod 1 before multiplying by 2 pi.
cplx plane_element(const HyperbolicFrame& f, const LinearizedChain& c, PhasePoint X1,
                   PhasePoint X2, double S_fp, int alpha, double hbar) {
    FrameCoords xi = to_frame_coords(f, X1 - X2);
    const double inv_h = 1.0 / hbar;

    double damp = c.E.quad(xi.u, xi.s) * inv_h;
    SymMat2 quarterB_D = 0.25 * c.B + c.D;

    // [t S_fp]/hbar reduced first: inv_h * S_fp * t = 2 pi (N t S_fp)
    double n_action = inv_h / (2.0 * kPi) * S_fp * c.t; // = N t S_fp for torus hbar
    double phase = 2.0 * kPi * std::fmod(n_action, 1.0);
    phase += c.t * 0.5 * kPi * alpha;
    phase += inv_h * (quarterB_D.quad(xi.u, xi.s) - 0.5 * wedge(X1, X2));
    phase -= 0.5 * c.epsilon;

    double amp = 2.0 / std::sqrt(c.detV_mod * c.detM1);
    return amp * std::exp(-damp) * std::polar(1.0, phase);
}

} // namespace

cplx coherent_sc_element_plane(const HyperbolicFrame& f, double t, PhasePoint X1, PhasePoint X2,
                               double S_fp, int alpha, double hbar) {
    LinearizedChain c = chain_at(f, t);
    return plane_element(f, c, X1, X2, S_fp, alpha, hbar);
}

namespace {

// w_k = exp[2 pi i chi^k] exp[i pi N kp kq] exp[-i pi N X2^k]
cplx image_weight(int N, PhasePoint chi, PhasePoint X2, long kp, long kq) {
    double sign = int_pi_sign((long long)(N) * kp * kq);
    double ph = -kPi * N * (X2.p * double(kq) - X2.q * double(kp));
    if (chi.p != 0.0 || chi.q != 0.0)
        ph += 2.0 * kPi * (chi.p * double(kq) - chi.q * double(kp));
    return sign * std::polar(1.0, ph);
}

} // namespace

cplx torus_periodize(const std::function<cplx(PhasePoint, PhasePoint)>& elem, PhasePoint X1,
                     PhasePoint X2, int kmax, const TorusHilbert& h, PhasePoint chi) {
    if (kmax < 1) throw Error("torus_periodize: kmax must be >= 1");
    cplx acc = 0.0;
    for (long kp = -kmax; kp <= kmax; ++kp)
        for (long kq = -kmax; kq <= kmax; ++kq)
            acc += image_weight(h.N, chi, X2, kp, kq) *
                   elem(X1, X2 + PhasePoint{double(kp), double(kq)});
    return std::sqrt(0.5 * h.N) * acc;
}

std::vector<std::pair<long, long>> periodization_images(const HyperbolicFrame& f,
                                                        const LinearizedChain& c, double hbar,
                                                        PhasePoint X1, PhasePoint X2,
                                                        double nsigma) {
    // bounding box of the damping ellipse xi'E xi <= (nsigma)^2 hbar in (u,s)
    double detE = c.E.det();
    double umax, smax;
    if (detE <= 0) { // t = 0 limit is positive definite; guard anyway
        umax = smax = nsigma * std::sqrt(hbar / std::fmin(c.E.xx, c.E.yy));
    } else {
        umax = nsigma * std::sqrt(hbar * c.E.yy / detE);
        smax = nsigma * std::sqrt(hbar * c.E.xx / detE);
    }

    PhasePoint xi0 = X1 - X2;
    FrameCoords f0 = to_frame_coords(f, xi0);
    const PhasePoint zu = f.zeta_u, zs = f.zeta_s;

    // u(k) = f0.u - (kp zs.q - kq zs.p), s(k) = f0.s - (zu.p kq - zu.q kp)
    long Kq = (long)std::ceil(std::fabs(xi0.q) + umax * std::fabs(zu.q) +
                              smax * std::fabs(zs.q)) + 1;

    std::vector<std::pair<long, long>> out;
    auto interval = [](double coeff, double center, double halfwidth, double& lo, double& hi,
                       bool& feasible) {
        // |coeff * kp - center| <= halfwidth
        if (std::fabs(coeff) < 1e-14) {
            feasible = std::fabs(center) <= halfwidth;
            return false; // no kp restriction from this row
        }
        double a = (center - halfwidth) / coeff, b = (center + halfwidth) / coeff;
        lo = std::fmin(a, b);
        hi = std::fmax(a, b);
        feasible = true;
        return true;
    };

    for (long kq = -Kq; kq <= Kq; ++kq) {
        // u-row: u = (f0.u + kq zs.p) - kp zs.q  ->  coeff = zs.q, center = f0.u + kq zs.p
        // s-row: s = (f0.s - zu.p kq) + kp zu.q  ->  coeff = -zu.q, center = -(f0.s - zu.p kq)
        double lo = -1e18, hi = 1e18;
        bool ok = true;
        double l1, h1;
        bool fe;
        if (interval(zs.q, f0.u + kq * zs.p, umax, l1, h1, fe)) {
            lo = std::fmax(lo, l1);
            hi = std::fmin(hi, h1);
        }
        ok = ok && fe;
        if (interval(-zu.q, -(f0.s - zu.p * double(kq)), smax, l1, h1, fe)) {
            lo = std::fmax(lo, l1);
            hi = std::fmin(hi, h1);
        }
        ok = ok && fe;
        if (!ok || lo > hi) continue;
        for (long kp = (long)std::ceil(lo - 1e-9); kp <= (long)std::floor(hi + 1e-9); ++kp) {
            double u = f0.u - (kp * zs.q - kq * zs.p);
            double s = f0.s - (zu.p * kq - zu.q * kp);
            if (std::fabs(u) <= umax && std::fabs(s) <= smax) out.emplace_back(kp, kq);
        }
    }
    return out;
}

namespace {

struct PeriodizedKernel {
    cplx value;        // sum over images, without sqrt(N/2)
    double gauss_damp; // sum of image damping factors
    double phase0;     // phase of the k=0 image
    int n_images;
};

PeriodizedKernel periodized_kernel(const TorusHilbert& h, const CatMapSpec& spec,
                                   const LinearizedChain& c, PhasePoint X1, PhasePoint X2,
                                   double S_fp, const ScEngineConfig& cfg) {
    const HyperbolicFrame& f = spec.frame;
    const double inv_h = 1.0 / h.hbar;
    const double amp = 2.0 / std::sqrt(c.detV_mod * c.detM1);
    const SymMat2 quarterB_D = 0.25 * c.B + c.D;

    double n_action = double(h.N) * S_fp * c.t;
    double base_phase = 2.0 * kPi * std::fmod(n_action, 1.0) +
                        c.t * 0.5 * kPi * spec.morse_alpha - 0.5 * c.epsilon;

    auto images = periodization_images(f, c, h.hbar, X1, X2, cfg.nsigma);

    PeriodizedKernel out{0.0, 0.0, 0.0, int(images.size())};
    for (auto [kp, kq] : images) {
        PhasePoint Xk = X2 + PhasePoint{double(kp), double(kq)};
        FrameCoords xi = to_frame_coords(f, X1 - Xk);
        double damp = c.E.quad(xi.u, xi.s) * inv_h;
        double gd = std::exp(-damp);
        double phase = base_phase + inv_h * (quarterB_D.quad(xi.u, xi.s) - 0.5 * wedge(X1, Xk));
        cplx w = image_weight(h.N, cfg.chi, X2, kp, kq);
        out.value += w * amp * gd * std::polar(1.0, phase);
        out.gauss_damp += gd;
        if (kp == 0 && kq == 0) out.phase0 = phase;
    }
    return out;
}

} // namespace

cplx sc_coherent_torus(const TorusHilbert& h, const CatMapSpec& spec, int t, PhasePoint X1,
                       PhasePoint X2, double S_fp, const ScEngineConfig& cfg) {
    LinearizedChain c = chain_at(spec.frame, double(t));
    PeriodizedKernel k = periodized_kernel(h, spec, c, X1, X2, S_fp, cfg);
    return std::sqrt(0.5 * h.N) * k.value * std::polar(1.0, cfg.propagator_phase * t);
}

double sc_coherent_norm2(const TorusHilbert& h, const CatMapSpec& spec, PhasePoint X,
                         const ScEngineConfig& cfg) {
    return std::real(sc_coherent_torus(h, spec, 0, X, X, 0.0, cfg));
}

double amplitude_A(double T, double phi1, double phi2) {
    double dphi = phi2 - phi1;
    return T * std::sqrt(0.5 * kPi) * std::exp(-T * T * dphi * dphi / 32.0);
}

cplx discrete_window_weight(int t, int tR, double phi1, double phi2, double T, int cutoff) {
    if (cutoff < 1) throw Error("discrete_window_weight: cutoff must be >= 1");
    cplx acc = 0.0;
    for (int t1 = -cutoff; t1 <= cutoff; ++t1) {
        int t2 = tR - t + t1;
        if (std::abs(t2) > cutoff) continue;
        acc += std::polar(window(t1, T) * window(t2, T), phi2 * t2 - phi1 * t1);
    }
    return acc;
}

const char* to_string(ScMode m) { return m == ScMode::PaperA ? "paperA" : "exactW"; }

ScarScResult scar_sc_element(const TorusHilbert& h, const CatMapSpec& spec, const ScarParams& p1,
                             const ScarParams& p2, int t, ScMode mode,
                             const ScEngineConfig& cfg) {
    if (!is_fixed_point(spec, p1.X))
        throw NotFixedPoint("scar_sc_element: X1 is not a fixed point of the map");
    if (!is_fixed_point(spec, p2.X))
        throw NotFixedPoint("scar_sc_element: X2 is not a fixed point of the map");
    if (p1.T != p2.T || p1.cutoff != p2.cutoff)
        throw Error("scar_sc_element: the two scar tates must share T and cutoff");

    const double T = p2.T;
    const int cutoff = p2.cutoff;
    const double S2 = fixed_point_action(spec, p2.X);

    // window weights per tR, shared by the element and the two norms
    auto weights = [&](int tt, double ph1, double ph2, std::vector<std::pair<int, cplx>>& out) {
        out.clear();
        if (mode == ScMode::ExactW) {
            double peak = std::abs(discrete_window_weight(tt, tt, ph1, ph2, T, cutoff));
            for (int tR = tt - 2 * cutoff; tR <= tt + 2 * cutoff; ++tR) {
                cplx w = discrete_window_weight(tt, tR, ph1, ph2, T, cutoff);
                if (std::abs(w) > 1e-18 * peak) out.emplace_back(tR, w);
            }
        } else {
            double A = amplitude_A(T, ph1, ph2);
            int win = int(std::floor(T)); // kernel cut at |t - t'| > T
            for (int tp = tt - win; tp <= tt + win; ++tp) {
                double g = std::exp(-2.0 * double(tt - tp) * double(tt - tp) / (T * T));
                cplx w = A * g * std::polar(1.0, -0.5 * (ph1 + ph2) * double(tt - tp));
                out.emplace_back(tp, w);
            }
        }
    };

    auto accumulate = [&](PhasePoint Xa, PhasePoint Xb, double S_fp, int tt, double ph1,
                          double ph2, std::vector<ScTermRecord>* breakdown) -> cplx {
        std::vector<std::pair<int, cplx>> ws;
        weights(tt, ph1, ph2, ws);
        cplx total = 0.0;
        for (auto& [tR, w] : ws) {
            LinearizedChain c = chain_at(spec.frame, double(tR));
            PeriodizedKernel k = periodized_kernel(h, spec, c, Xa, Xb, S_fp, cfg);
            cplx phased = k.value * std::polar(1.0, cfg.propagator_phase * tR);
            total += w * phased;
            if (breakdown) {
                ScTermRecord rec;
                rec.tprime = tR;
                rec.chain = c;
                rec.delta = point_shift(spec.frame, double(tR), to_frame_coords(spec.frame, Xa - Xb));
                rec.action_mid = action_mid(S_fp, c, to_frame_coords(spec.frame, Xa - Xb),
                                            double(tR), spec.morse_alpha, h.hbar);
                rec.gauss_damp = k.gauss_damp;
                rec.phase = k.phase0;
                rec.term = k.value;
                rec.weight = w;
                rec.n_images = k.n_images;
                breakdown->push_back(rec);
            }
        }
        return std::sqrt(0.5 * h.N) * total;
    };

    ScarScResult res;
    res.raw = accumulate(p1.X, p2.X, S2, t, p1.phi, p2.phi, &res.breakdown);
    res.value = res.raw;
    if (p1.normalize && p2.normalize) {
        double S1 = fixed_point_action(spec, p1.X);
        double n1 = std::real(accumulate(p1.X, p1.X, S1, 0, p1.phi, p1.phi, nullptr));
        double n2 = std::real(accumulate(p2.X, p2.X, S2, 0, p2.phi, p2.phi, nullptr));
        res.norm1 = std::sqrt(n1);
        res.norm2 = std::sqrt(n2);
        res.value = res.raw / (res.norm1 * res.norm2);
    }
    return res;
}

} // namespace scarmat
