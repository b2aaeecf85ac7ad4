#include "scarmat/exact_oracle.hpp"

#include <cmath>
#include <vector>

#include "quad_math.hpp"
#include "scarmat/errors.hpp"

namespace scarmat {

namespace {

using quad::complex;
using quad::real;

std::vector<complex> coherent_state_q(int N, PhasePoint X, int jmax = 4) {
    std::vector<complex> psi(N);
    const real pi = quad::q_pi();
    const real inv_h = 2 * pi * N;
    const real P = X.p, Q = X.q;
    for (int k = 0; k < N; ++k) {
        complex acc{};
        for (int j = -jmax; j <= jmax; ++j) {
            real q = real(k) / N + j;
            real g = -(q - Q) * (q - Q) * real(0.5) * inv_h;
            real ph = inv_h * P * (q - real(0.5) * Q);
            acc += quad::q_exp(g) * quad::polar1(quad::q_fmod(ph, 2 * pi));
        }
        psi[k] = acc;
    }
    return psi;
}

// dense cat propagator in quad precision
std::vector<complex> cat_propagator_q(int N) {
    std::vector<complex> U(size_t(N) * N);
    const real pi = quad::q_pi();
    const real pref = 1 / quad::q_sqrt(real(N));
    const complex root_i = quad::polar1(pi / 4);
    for (long k = 0; k < N; ++k) {
        for (long j = 0; j < N; ++j) {
            long e = ((k * k - j * k + j * j) % N + N) % N;
            U[size_t(k) * N + j] = pref * (root_i * quad::polar1(2 * pi * real(e) / N));
        }
    }
    return U;
}

std::vector<complex> matvec_q(const std::vector<complex>& U, const std::vector<complex>& x,
                              int N, bool adjoint) {
    std::vector<complex> y(N);
#pragma omp parallel for schedule(static)
    for (int k = 0; k < N; ++k) {
        complex acc{};
        if (!adjoint) {
            const complex* row = U.data() + size_t(k) * N;
            for (int j = 0; j < N; ++j) acc += row[j] * x[j];
        } else {
            for (int j = 0; j < N; ++j) acc += U[size_t(j) * N + k].conj() * x[j];
        }
        y[k] = acc;
    }
    return y;
}

} // namespace

cplx coherent_element_exact(const TorusHilbert& h, PhasePoint X1, PhasePoint X2, int t) {
    const int N = h.N;
    auto v1 = coherent_state_q(N, X1);
    auto v2 = coherent_state_q(N, X2);
    auto U = cat_propagator_q(N);

    auto w = v2;
    for (int s = std::abs(t); s > 0; --s) w = matvec_q(U, w, N, t < 0);

    complex num{};
    real n1{0}, n2{0};
    for (int k = 0; k < N; ++k) {
        num += v1[k].conj() * w[k];
        n1 += v1[k].abs2();
        n2 += v2[k].abs2();
    }
    real scale = 1 / quad::q_sqrt(n1 * n2);
    return {double(num.re * scale), double(num.im * scale)};
}

cplx scar_element_exact(const TorusHilbert& h, const PropagatorPowers& powers,
                        const ScarParams& p1, const ScarParams& p2, int t) {
    CVector s1 = scar_state(h, powers, p1);
    CVector s2 = scar_state(h, powers, p2);
    CVector w = powers.apply(t, s2);
    return dense::vdot(s1, w);
}

std::optional<NilpotentOrder> nilpotent_order(const CMatrix& U, int kmax, double tol) {
    const int N = U.n();
    CMatrix P = U;
    for (int k = 1; k <= kmax; ++k) {
        // fit the scalar from the mean diagonal, then measure the residual
        cplx mean = 0.0;
        for (int i = 0; i < N; ++i) mean += P(i, i);
        mean /= double(N);
        double phase = std::arg(mean);
        cplx scalar = std::polar(1.0, phase);
        double res = 0.0;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c)
                res = std::fmax(res, std::abs(P(r, c) - (r == c ? scalar : cplx(0.0))));
        if (res <= tol) return NilpotentOrder{k, phase, res};
        if (k < kmax) P = dense::matmul(U, P);
    }
    return std::nullopt;
}

} // namespace scarmat
