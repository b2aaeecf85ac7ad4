#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "scarmat/cat_map.hpp"
#include "scarmat/dense.hpp"
#include "scarmat/phase_space.hpp"

namespace scarmat {

inline constexpr int kMaxDimension = 512; // dense algebra only

// Finite Hilbert space on the torus: dimension N, hbar = 1/(2 pi N).
struct TorusHilbert {
    int N;
    double hbar;

    explicit TorusHilbert(int n);
};

// Hannay-Berry cat propagator: <q_k|U|q_j> = (i/N)^{1/2} exp[(2 pi i/N)(k^2 - jk + j^2)],
// principal square root.
CMatrix cat_propagator(const TorusHilbert& h);

// Generalization to an arbitrary integer cat with B = diag(b1, b2) not needed here;
// the quantized family is fixed by default_cat().

// U^t cache: single writer, many readers.
class PropagatorPowers {
  public:
    explicit PropagatorPowers(CMatrix U);

    const CMatrix& base() const { return U_; }
    // U^t; negative t via the adjoint. Cached per t.
    std::shared_ptr<const CMatrix> power(int t) const;
    // U^t x without materializing new powers beyond the cache.
    CVector apply(int t, const CVector& x) const;

  private:
    CMatrix U_;
    CMatrix Udag_;
    mutable std::map<int, std::shared_ptr<const CMatrix>> cache_;
    mutable std::shared_mutex mutex_;
};

// Torus coherent state |X>: position amplitudes
//   psi_k = sum_{|j|<=jmax} exp[-(k/N + j - Q)^2/(2 hbar) + (i/hbar) P (k/N + j - Q/2)],
// the image sum of the unit-frequency plane Gaussian. Not normalized.
CVector coherent_state(const TorusHilbert& h, PhasePoint X, int jmax = 3);

// Lattice translation T_(a,b), shift b in position and a in momentum (units 1/N):
// T|q_k> = exp[(2 pi i/N)(a k + a b/2)] |q_{k+b}>. a, b arbitrary integers.
CMatrix translation_op(const TorusHilbert& h, long a, long b);

// Reflection through x = (a/N, b/N), odd N only:
// R|q_j> = exp[(4 pi i/N) a(b-j)] |q_{2b-j mod N}>. Throws EvenNUnsupported.
CMatrix reflection_op(const TorusHilbert& h, long a, long b);

// Weyl symbol A_W(a,b) = Tr[R_(a/N,b/N) A] on the N x N center lattice (odd N).
// Row-major grid indexed [a*N + b]. OpenMP over lattice points; *_serial reference.
std::vector<cplx> weyl_symbol(const TorusHilbert& h, const CMatrix& A);
std::vector<cplx> weyl_symbol_serial(const TorusHilbert& h, const CMatrix& A);

// Operator reconstruction A = (1/N) sum_x A_W(x) R_x.
CMatrix weyl_reconstruct(const TorusHilbert& h, const std::vector<cplx>& symbol);

// Direct winding-sum formula for the one-step cat symbol at x = (a/N, b/N):
//   U_W(x) = e^{i pi/2} (1/4) [2/|det(M+1)|^{1/2}] sum_{cell} exp[2 pi i N S(x, m)].
// exp[2 pi i N S(x, m)] is periodic in m on a sublattice; the sum runs over the
// rectangular cell m in [0,6) x [0,2) which covers each class twice (hence the
// 1/4 with the index-6 period lattice). e^{i pi/2} is the Hannay-Berry branch.
cplx cat_weyl_formula(const TorusHilbert& h, const CatMapSpec& spec, long a, long b);

} // namespace scarmat
