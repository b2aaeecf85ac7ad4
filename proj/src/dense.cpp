#include "scarmat/dense.hpp"

#include <cmath>
#include <cstdlib>

namespace scarmat {

CMatrix CMatrix::identity(int n) {
    CMatrix I(n);
    for (int i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

CMatrix CMatrix::adjoint() const {
    CMatrix R(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) R(c, r) = std::conj((*this)(r, c));
    return R;
}

namespace dense {

CMatrix matmul_serial(const CMatrix& A, const CMatrix& B) {
    const int n = A.n();
    CMatrix C(n);
    for (int i = 0; i < n; ++i) {
        cplx* ci = C.row(i);
        for (int k = 0; k < n; ++k) {
            const cplx aik = A(i, k);
            const cplx* bk = B.row(k);
            for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
    }
    return C;
}

CMatrix matmul(const CMatrix& A, const CMatrix& B) {
    const int n = A.n();
    CMatrix C(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        cplx* ci = C.row(i);
        for (int k = 0; k < n; ++k) {
            const cplx aik = A(i, k);
            const cplx* bk = B.row(k);
            for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
    }
    return C;
}

CVector matvec_serial(const CMatrix& A, const CVector& x) {
    const int n = A.n();
    CVector y(n);
    for (int i = 0; i < n; ++i) {
        const cplx* ai = A.row(i);
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) acc += ai[j] * x[j];
        y[i] = acc;
    }
    return y;
}

CVector matvec(const CMatrix& A, const CVector& x) {
    const int n = A.n();
    CVector y(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const cplx* ai = A.row(i);
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) acc += ai[j] * x[j];
        y[i] = acc;
    }
    return y;
}

cplx vdot(const CVector& a, const CVector& b) {
    // long-double accumulation: overlaps with heavy cancellation feed the oracle
    long double re = 0.0L, im = 0.0L;
    for (size_t i = 0; i < a.size(); ++i) {
        cplx t = std::conj(a[i]) * b[i];
        re += (long double)t.real();
        im += (long double)t.imag();
    }
    return {double(re), double(im)};
}

double norm(const CVector& a) {
    long double s = 0.0L;
    for (auto& z : a) s += (long double)std::norm(z);
    return double(std::sqrt((long double)s));
}

void scale(CVector& a, cplx s) {
    for (auto& z : a) z *= s;
}

void axpy(CVector& y, cplx alpha, const CVector& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

double max_abs_diff(const CMatrix& A, const CMatrix& B) {
    double m = 0.0;
    for (int r = 0; r < A.n(); ++r)
        for (int c = 0; c < A.n(); ++c) m = std::fmax(m, std::abs(A(r, c) - B(r, c)));
    return m;
}

double max_abs_diff(const CVector& a, const CVector& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::fmax(m, std::abs(a[i] - b[i]));
    return m;
}

double unitarity_error(const CMatrix& U) {
    CMatrix P = matmul(U.adjoint(), U);
    return max_abs_diff(P, CMatrix::identity(U.n()));
}

} // namespace dense

} // namespace scarmat
