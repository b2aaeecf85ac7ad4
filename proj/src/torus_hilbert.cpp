#include "scarmat/torus_hilbert.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "scarmat/errors.hpp"

namespace scarmat {

namespace {
constexpr double kPi = std::numbers::pi;

inline long mod_n(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}
} // namespace

TorusHilbert::TorusHilbert(int n) : N(n), hbar(1.0 / (2.0 * kPi * n)) {
    if (n < 1) throw Error("TorusHilbert: N must be positive");
    if (n > kMaxDimension)
        throw DimensionTooLarge("TorusHilbert: N = " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxDimension));
}

CMatrix cat_propagator(const TorusHilbert& h) {
    const int N = h.N;
    CMatrix U(N);
    const double pref = 1.0 / std::sqrt(double(N));
    const cplx root_i = std::polar(1.0, kPi / 4.0); // principal (i)^{1/2}
    for (int k = 0; k < N; ++k) {
        for (int j = 0; j < N; ++j) {
            long e = (long(k) * k - long(j) * k + long(j) * j) % N;
            U(k, j) = pref * root_i * std::polar(1.0, 2.0 * kPi * double(e) / N);
        }
    }
    return U;
}

PropagatorPowers::PropagatorPowers(CMatrix U) : U_(std::move(U)), Udag_(U_.adjoint()) {}

std::shared_ptr<const CMatrix> PropagatorPowers::power(int t) const {
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(t);
        if (it != cache_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;

    std::shared_ptr<const CMatrix> result;
    if (t == 0) {
        result = std::make_shared<CMatrix>(CMatrix::identity(U_.n()));
    } else {
        // extend from the nearest cached power of the same sign
        int sign = t > 0 ? 1 : -1;
        int best = 0;
        std::shared_ptr<const CMatrix> from;
        for (auto& [s, m] : cache_) {
            if (sign * s > 0 && sign * s <= sign * t && std::abs(s) > std::abs(best)) {
                best = s;
                from = m;
            }
        }
        CMatrix acc = from ? *from : CMatrix::identity(U_.n());
        const CMatrix& step = sign > 0 ? U_ : Udag_;
        for (int s = best; s != t; s += sign) acc = dense::matmul(step, acc);
        result = std::make_shared<CMatrix>(std::move(acc));
    }
    cache_.emplace(t, result);
    return result;
}

CVector PropagatorPowers::apply(int t, const CVector& x) const {
    CVector y = x;
    const CMatrix& step = t >= 0 ? U_ : Udag_;
    for (int s = std::abs(t); s > 0; --s) y = dense::matvec(step, y);
    return y;
}

CVector coherent_state(const TorusHilbert& h, PhasePoint X, int jmax) {
    const int N = h.N;
    CVector psi(N);
    const double inv_h = 1.0 / h.hbar; // = 2 pi N
    for (int k = 0; k < N; ++k) {
        cplx acc = 0.0;
        for (int j = -jmax; j <= jmax; ++j) {
            double q = double(k) / N + j;
            double g = -(q - X.q) * (q - X.q) * 0.5 * inv_h;
            double ph = inv_h * X.p * (q - 0.5 * X.q);
            acc += std::exp(g) * std::polar(1.0, std::fmod(ph, 2.0 * kPi));
        }
        psi[k] = acc;
    }
    return psi;
}

CMatrix translation_op(const TorusHilbert& h, long a, long b) {
    const int N = h.N;
    CMatrix T(N);
    for (long k = 0; k < N; ++k) {
        // phase exp[(2 pi i/N)(a k + a b / 2)]
        double ph = (2.0 * kPi / N) * (double(a) * k + 0.5 * double(a) * b);
        T(int(mod_n(k + b, N)), int(k)) = std::polar(1.0, ph);
    }
    return T;
}

CMatrix reflection_op(const TorusHilbert& h, long a, long b) {
    const int N = h.N;
    if (N % 2 == 0)
        throw EvenNUnsupported("reflection_op: N = " + std::to_string(N) + " is even");
    CMatrix R(N);
    for (long j = 0; j < N; ++j) {
        double ph = (4.0 * kPi / N) * double(mod_n(a * (b - j), N));
        R(int(mod_n(2 * b - j, N)), int(j)) = std::polar(1.0, ph);
    }
    return R;
}

namespace {
// Tr[R_(a/N,b/N) A] without materializing R: R(j',j) is a phased permutation.
cplx symbol_at(const TorusHilbert& h, const CMatrix& A, long a, long b) {
    const int N = h.N;
    cplx acc = 0.0;
    for (long j = 0; j < N; ++j) {
        long jp = mod_n(2 * b - j, N);
        double ph = (4.0 * kPi / N) * double(mod_n(a * (b - j), N));
        acc += std::polar(1.0, ph) * A(int(j), int(jp));
    }
    return acc;
}
} // namespace

std::vector<cplx> weyl_symbol_serial(const TorusHilbert& h, const CMatrix& A) {
    const int N = h.N;
    if (N % 2 == 0) throw EvenNUnsupported("weyl_symbol: even N");
    std::vector<cplx> W(size_t(N) * N);
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) W[size_t(a) * N + b] = symbol_at(h, A, a, b);
    return W;
}

std::vector<cplx> weyl_symbol(const TorusHilbert& h, const CMatrix& A) {
    const int N = h.N;
    if (N % 2 == 0) throw EvenNUnsupported("weyl_symbol: even N");
    std::vector<cplx> W(size_t(N) * N);
#pragma omp parallel for schedule(static)
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) W[size_t(a) * N + b] = symbol_at(h, A, a, b);
    return W;
}

CMatrix weyl_reconstruct(const TorusHilbert& h, const std::vector<cplx>& symbol) {
    const int N = h.N;
    if (N % 2 == 0) throw EvenNUnsupported("weyl_reconstruct: even N");
    CMatrix A(N);
    for (long a = 0; a < N; ++a) {
        for (long b = 0; b < N; ++b) {
            cplx w = symbol[size_t(a) * N + b] / double(N);
            for (long j = 0; j < N; ++j) {
                long jp = mod_n(2 * b - j, N);
                double ph = (4.0 * kPi / N) * double(mod_n(a * (b - j), N));
                A(int(jp), int(j)) += w * std::polar(1.0, ph);
            }
        }
    }
    return A;
}

cplx cat_weyl_formula(const TorusHilbert& h, const CatMapSpec& spec, long a, long b) {
    const int N = h.N;
    PhasePoint x{double(a) / N, double(b) / N};
    double pref = 0.5 / std::sqrt(std::fabs((spec.M + Mat2::identity()).det()));
    cplx acc = 0.0;
    for (long mp = 0; mp < 6; ++mp) {
        for (long mq = 0; mq < 2; ++mq) {
            double S = generating_action(spec, x, Winding{mp, mq});
            acc += std::polar(1.0, 2.0 * kPi * N * std::fmod(S, 1.0));
        }
    }
    return cplx(0.0, 1.0) * pref * acc;
}

} // namespace scarmat
