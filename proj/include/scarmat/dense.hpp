#pragma once

#include <complex>
#include <vector>

namespace scarmat {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// Dense square complex matrix, row-major.
class CMatrix {
  public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(size_t(n) * n) {}

    int n() const { return n_; }
    cplx& operator()(int r, int c) { return a_[size_t(r) * n_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[size_t(r) * n_ + c]; }
    const cplx* row(int r) const { return a_.data() + size_t(r) * n_; }
    cplx* row(int r) { return a_.data() + size_t(r) * n_; }
    const std::vector<cplx>& data() const { return a_; }

    static CMatrix identity(int n);
    CMatrix adjoint() const;

  private:
    int n_ = 0;
    std::vector<cplx> a_;
};

namespace dense {

// OpenMP-parallel kernels; *_serial are the reference implementations the
// tests and the benchmark compare against.
CMatrix matmul(const CMatrix& A, const CMatrix& B);
CMatrix matmul_serial(const CMatrix& A, const CMatrix& B);

CVector matvec(const CMatrix& A, const CVector& x);
CVector matvec_serial(const CMatrix& A, const CVector& x);

cplx vdot(const CVector& a, const CVector& b); // conj(a).b
double norm(const CVector& a);
void scale(CVector& a, cplx s);
void axpy(CVector& y, cplx alpha, const CVector& x); // y += alpha x

double max_abs_diff(const CMatrix& A, const CMatrix& B);
double max_abs_diff(const CVector& a, const CVector& b);

// max-norm of U^dag U - 1
double unitarity_error(const CMatrix& U);

} // namespace dense

} // namespace scarmat
