#include "scarmat/props.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "scarmat/cat_map.hpp"
#include "scarmat/exact_oracle.hpp"
#include "scarmat/sc_engine.hpp"

namespace scarmat {

namespace {

constexpr double kPi = std::numbers::pi;

SuiteResult item(const std::string& name, double residual, double tol) {
    return {name, residual, tol, residual <= tol};
}

Mat2 random_symplectic(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    // product of unit shears is symplectic by construction
    Mat2 A{1, u(rng), 0, 1};
    Mat2 B{1, 0, u(rng), 1};
    Mat2 C{1, u(rng), 0, 1};
    return A * B * C;
}

} // namespace

std::vector<SuiteResult> props_symplectic(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::vector<SuiteResult> out;

    // J B (1+M) = (1-M) for the Cayley form of random symplectic M
    double r1 = 0;
    for (int i = 0; i < 50; ++i) {
        Mat2 M = random_symplectic(rng);
        if (std::fabs((M + Mat2::identity()).det()) < 1e-6) continue;
        Mat2 lhs = symplectic_J() * cayley_of(M).as_mat2() * (Mat2::identity() + M);
        Mat2 rhs = Mat2::identity() - M;
        r1 = std::fmax(r1, max_abs_entry(lhs - rhs));
    }
    out.push_back(item("cayley: J B (1+M) = (1-M), random symplectic", r1, 1e-12));

    // frame coordinates preserve the wedge
    HyperbolicFrame f = default_cat().frame;
    double r2 = 0, r3 = 0;
    for (int i = 0; i < 200; ++i) {
        PhasePoint a{u(rng), u(rng)}, b{u(rng), u(rng)};
        FrameCoords ca = to_frame_coords(f, a), cb = to_frame_coords(f, b);
        r2 = std::fmax(r2, std::fabs((ca.u * cb.s - ca.s * cb.u) - wedge(a, b)));
        // gram reproduces the Euclidean norm of the reconstruction
        double q = f.gram.quad(ca.u, ca.s);
        r3 = std::fmax(r3, std::fabs(q - norm2(a)));
    }
    out.push_back(item("frame coords: wedge preserved", r2, 1e-12));
    out.push_back(item("gram: x'Cx equals |x|^2 in frame coords", r3, 1e-12));
    out.push_back(item("gram positive definite, det = 1",
                       std::fabs(f.gram.det() - 1.0) + (f.gram.xx > 0 ? 0.0 : 1.0), 1e-12));
    return out;
}

std::vector<SuiteResult> props_torus(int N, unsigned seed, bool include_weyl) {
    std::mt19937 rng(seed);
    std::vector<SuiteResult> out;
    TorusHilbert h(N);
    CatMapSpec cat = default_cat();
    CMatrix U = cat_propagator(h);
    std::uniform_int_distribution<long> lat(0, N - 1);

    out.push_back(item("propagator unitarity", dense::unitarity_error(U), 1e-12));

    {
        CMatrix U2 = dense::matmul(U, U);
        CMatrix U3 = dense::matmul(U2, U);
        double r = dense::max_abs_diff(dense::matmul(U, U3), dense::matmul(U3, U));
        out.push_back(item("U commutes with its powers", r, 1e-12));
        std::uniform_real_distribution<double> g(-1.0, 1.0);
        double rn = 0;
        for (int i = 0; i < 20; ++i) {
            CVector v(N);
            for (auto& z : v) z = cplx(g(rng), g(rng));
            dense::scale(v, 1.0 / dense::norm(v));
            rn = std::fmax(rn, std::fabs(dense::norm(dense::matvec(U, v)) - 1.0));
        }
        out.push_back(item("U preserves norms (unit-circle spectrum)", rn, 1e-12));
    }

    // translation group law (tt): T_{x2} T_{x1} = T_{x1+x2} e^{-i xi1^xi2 / 2 hbar}
    double rtt = 0;
    for (int i = 0; i < 200; ++i) {
        long a1 = lat(rng), b1 = lat(rng), a2 = lat(rng), b2 = lat(rng);
        CMatrix lhs = dense::matmul(translation_op(h, a2, b2), translation_op(h, a1, b1));
        double ph = -kPi / N * double(a1 * b2 - b1 * a2);
        CMatrix rhs = translation_op(h, a1 + a2, b1 + b2);
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) rhs(r, c) *= std::polar(1.0, ph);
        rtt = std::fmax(rtt, dense::max_abs_diff(lhs, rhs));
    }
    out.push_back(item("translation group law (200 random pairs)", rtt, 1e-12));

    {
        long a = lat(rng), b = lat(rng);
        CMatrix Tm = translation_op(h, -a, -b);
        out.push_back(
            item("T(-xi) is the adjoint", dense::max_abs_diff(translation_op(h, a, b).adjoint(), Tm),
                 1e-12));
    }

    if (include_weyl && N % 2 == 1) {
        // completeness (1R)
        CMatrix acc(N);
        for (long a = 0; a < N; ++a)
            for (long b = 0; b < N; ++b) {
                CMatrix R = reflection_op(h, a, b);
                for (int r = 0; r < N; ++r)
                    for (int c = 0; c < N; ++c) acc(r, c) += R(r, c) / double(N);
            }
        out.push_back(item("reflection completeness (1/N) sum R = 1",
                           dense::max_abs_diff(acc, CMatrix::identity(N)), 1e-12));

        // trace orthogonality: Tr[R1 R2] = N delta
        double rort = 0;
        for (int i = 0; i < 100; ++i) {
            long a1 = lat(rng), b1 = lat(rng), a2 = lat(rng), b2 = lat(rng);
            CMatrix P = dense::matmul(reflection_op(h, a1, b1), reflection_op(h, a2, b2));
            cplx tr = 0.0;
            for (int r = 0; r < N; ++r) tr += P(r, r);
            cplx want = (a1 == a2 && b1 == b2) ? cplx(double(N)) : cplx(0.0);
            rort = std::fmax(rort, std::abs(tr - want));
        }
        out.push_back(item("reflection trace orthogonality", rort, 1e-12));

        // R_x^2 = 1
        {
            long a = lat(rng), b = lat(rng);
            CMatrix R = reflection_op(h, a, b);
            out.push_back(item("reflection involution R^2 = 1",
                               dense::max_abs_diff(dense::matmul(R, R), CMatrix::identity(N)),
                               1e-12));
        }

        // composition identities with exact phases
        double rrt = 0, rtr = 0, rrr = 0, rtrip = 0;
        for (int i = 0; i < 200; ++i) {
            long a = lat(rng), b = lat(rng);
            long c2 = 2 * lat(rng) % (2 * N), d2 = 2 * lat(rng) % (2 * N); // even components
            // (rt): R_x T_xi = R_{x - xi/2} e^{-i x^xi / hbar}
            {
                CMatrix lhs = dense::matmul(reflection_op(h, a, b), translation_op(h, c2, d2));
                double ph = -(2.0 * kPi / N) * double(a * d2 - b * c2);
                CMatrix rhs = reflection_op(h, a - c2 / 2, b - d2 / 2);
                for (int r = 0; r < N; ++r)
                    for (int c = 0; c < N; ++c) rhs(r, c) *= std::polar(1.0, ph);
                rrt = std::fmax(rrt, dense::max_abs_diff(lhs, rhs));
            }
            // (tr): T_xi R_x = R_{x + xi/2} e^{-i x^xi / hbar}
            {
                CMatrix lhs = dense::matmul(translation_op(h, c2, d2), reflection_op(h, a, b));
                double ph = -(2.0 * kPi / N) * double(a * d2 - b * c2);
                CMatrix rhs = reflection_op(h, a + c2 / 2, b + d2 / 2);
                for (int r = 0; r < N; ++r)
                    for (int c = 0; c < N; ++c) rhs(r, c) *= std::polar(1.0, ph);
                rtr = std::fmax(rtr, dense::max_abs_diff(lhs, rhs));
            }
            // (rr): R_{x1} R_{x2} = T_{2(x1-x2)} e^{-2 i x1^x2 / hbar}
            {
                long a2v = lat(rng), b2v = lat(rng);
                CMatrix lhs = dense::matmul(reflection_op(h, a, b), reflection_op(h, a2v, b2v));
                double ph = -(4.0 * kPi / N) * double(a * b2v - b * a2v);
                CMatrix rhs = translation_op(h, 2 * (a - a2v), 2 * (b - b2v));
                for (int r = 0; r < N; ++r)
                    for (int c = 0; c < N; ++c) rhs(r, c) *= std::polar(1.0, ph);
                rrr = std::fmax(rrr, dense::max_abs_diff(lhs, rhs));
            }
            // triple reflection: R_{x2} R_x R_{x1} = e^{i D3/hbar} R_{x2-x+x1},
            // D3 = 2 (x2-x)^(x1-x)
            {
                long ax = lat(rng), bx = lat(rng), a1 = lat(rng), b1 = lat(rng);
                CMatrix lhs = dense::matmul(
                    reflection_op(h, a, b),
                    dense::matmul(reflection_op(h, ax, bx), reflection_op(h, a1, b1)));
                double d3 = 2.0 * (double(a - ax) * double(b1 - bx) -
                                   double(b - bx) * double(a1 - ax)) / double(N * N);
                double ph = 2.0 * kPi * N * d3;
                CMatrix rhs = reflection_op(h, a - ax + a1, b - bx + b1);
                for (int r = 0; r < N; ++r)
                    for (int c = 0; c < N; ++c) rhs(r, c) *= std::polar(1.0, ph);
                rtrip = std::fmax(rtrip, dense::max_abs_diff(lhs, rhs));
            }
        }
        out.push_back(item("composition R T (200 tuples)", rrt, 1e-12));
        out.push_back(item("composition T R (200 tuples)", rtr, 1e-12));
        out.push_back(item("composition R R (200 tuples)", rrr, 1e-12));
        out.push_back(item("triple reflection phase (200 tuples)", rtrip, 1e-12));

        // reflected coherent state: R_x |X> = e^{i X^x/hbar} |2x - X>
        double rrc = 0;
        for (int i = 0; i < 20; ++i) {
            long a = lat(rng), b = lat(rng);
            std::uniform_real_distribution<double> g(0.1, 0.9);
            PhasePoint X{g(rng), g(rng)};
            PhasePoint x{double(a) / N, double(b) / N};
            CVector lhs = dense::matvec(reflection_op(h, a, b), coherent_state(h, X));
            CVector rhs = coherent_state(h, 2.0 * x - X);
            dense::scale(rhs, std::polar(1.0, wedge(X, x) / h.hbar));
            rrc = std::fmax(rrc, dense::max_abs_diff(lhs, rhs) / dense::norm(rhs));
        }
        out.push_back(item("reflection maps coherent states (reflected, phased)", rrc, 1e-10));

        // Weyl symbol: identity -> 1; cat symmetry; reconstruction round trip
        {
            auto Wid = weyl_symbol(h, CMatrix::identity(N));
            double r = 0;
            for (auto& z : Wid) r = std::fmax(r, std::abs(z - cplx(1.0)));
            out.push_back(item("Weyl symbol of identity is 1", r, 1e-12));

            auto W = weyl_symbol(h, U);
            auto Wm = weyl_symbol(h, U.adjoint());
            double rsym = 0;
            for (long a = 0; a < N; ++a)
                for (long b = 0; b < N; ++b) {
                    cplx w = W[size_t(a) * N + b];
                    cplx wp = W[size_t((N - a) % N) * N + b];
                    cplx wq = W[size_t(a) * N + (N - b) % N];
                    rsym = std::fmax(rsym, std::abs(w - wp));
                    rsym = std::fmax(rsym, std::abs(w - wq));
                    // conj at (-p, q) gives the symbol of the inverse map
                    rsym = std::fmax(rsym, std::abs(std::conj(wp) - Wm[size_t(a) * N + b]));
                }
            out.push_back(item("cat symbol time-reversal symmetry (even; conj -> inverse)",
                               rsym, 1e-12));

            CMatrix back = weyl_reconstruct(h, W);
            out.push_back(item("Weyl round trip reconstructs U", dense::max_abs_diff(back, U),
                               1e-10));
        }
    }

    // coherent-state norm stability in the image cutoff (needs larger N)
    {
        TorusHilbert h50(std::max(N, 50));
        PhasePoint X{0.3, 0.7};
        double n3 = dense::norm(coherent_state(h50, X, 3));
        double n4 = dense::norm(coherent_state(h50, X, 4));
        out.push_back(item("coherent norm stable under jmax 3->4 (N>=50)", std::fabs(n4 - n3),
                           1e-12));
    }

    (void)cat;
    return out;
}

std::vector<SuiteResult> props_sc_engine(unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<SuiteResult> out;
    CatMapSpec cat = default_cat();
    const HyperbolicFrame& f = cat.frame;

    // closed forms vs the generic matrix-power / Cayley / complex-inversion route
    auto generic_chain = [&](double t) {
        LinearizedChain g;
        g.t = t;
        double ep = std::exp(f.lambda * t), em = std::exp(-f.lambda * t);
        // frame-basis matrices; M^t = diag(e^{lt}, e^{-lt})
        Mat2 Mt{ep, 0, 0, em};
        Mat2 Mp1 = Mt + Mat2::identity();
        SymMat2 B = cayley_of(Mt);
        std::complex<double> V11(f.gram.xx, -B.xx), V12(f.gram.xy, -B.xy), V22(f.gram.yy, -B.yy);
        std::complex<double> detV = V11 * V22 - V12 * V12;
        // Vt = J' V^{-1} J = V / det V for symmetric V
        std::complex<double> W11 = V11 / detV, W12 = V12 / detV, W22 = V22 / detV;
        g.B = B;
        g.detV_mod = std::abs(detV);
        g.epsilon = std::arg(detV);
        g.Cbar = SymMat2{W11.real(), W12.real(), W22.real()};
        g.Bbar = SymMat2{-W11.imag(), -W12.imag(), -W22.imag()};
        Mat2 Minv = Mp1.inverse();
        g.D = congruence(Minv, g.Bbar);
        g.E = congruence(Minv, g.Cbar);
        g.detM1 = std::fabs(Mp1.det());
        return g;
    };

    std::uniform_real_distribution<double> tr(-6.0, 6.0);
    double rmax = 0;
    auto compare = [&](double t) {
        LinearizedChain a = chain_at(f, t), b = generic_chain(t);
        double r = 0;
        r = std::fmax(r, max_abs_entry(a.B - b.B));
        r = std::fmax(r, std::fabs(a.detV_mod - b.detV_mod));
        r = std::fmax(r, std::fabs(a.epsilon - b.epsilon));
        r = std::fmax(r, max_abs_entry(a.Cbar - b.Cbar));
        r = std::fmax(r, max_abs_entry(a.Bbar - b.Bbar));
        r = std::fmax(r, max_abs_entry(a.D - b.D));
        r = std::fmax(r, max_abs_entry(a.E - b.E));
        r = std::fmax(r, std::fabs(a.detM1 - b.detM1) / std::fmax(1.0, a.detM1));
        rmax = std::fmax(rmax, r);
    };
    for (int t = -5; t <= 5; ++t) compare(double(t));
    for (int i = 0; i < 50; ++i) compare(tr(rng));
    out.push_back(item("chain closed forms vs generic route, t in [-6,6]", rmax, 1e-10));

    // (VCB): Cbar - i Bbar = (C - i B)/det V entrywise
    double rv = 0;
    for (int i = 0; i < 50; ++i) {
        double t = tr(rng);
        LinearizedChain c = chain_at(f, t);
        std::complex<double> detV(1.0 + c.tau * c.tau, 2.0 * f.d() * c.tau);
        auto entry = [&](double Cv, double Bv, double Cbv, double Bbv) {
            std::complex<double> want = std::complex<double>(Cv, -Bv) / detV;
            return std::abs(std::complex<double>(Cbv, -Bbv) - want);
        };
        rv = std::fmax(rv, entry(f.gram.xx, c.B.xx, c.Cbar.xx, c.Bbar.xx));
        rv = std::fmax(rv, entry(f.gram.xy, c.B.xy, c.Cbar.xy, c.Bbar.xy));
        rv = std::fmax(rv, entry(f.gram.yy, c.B.yy, c.Cbar.yy, c.Bbar.yy));
    }
    out.push_back(item("Cbar - i Bbar = (C - i B)/det V", rv, 1e-12));

    // t = 0 reduction of the plane element to the coherent overlap
    double r0 = 0;
    std::uniform_real_distribution<double> xr(-0.6, 0.6);
    double hbar = 1.0 / (2.0 * kPi * 100);
    for (int i = 0; i < 100; ++i) {
        PhasePoint X1{xr(rng), xr(rng)}, X2{xr(rng), xr(rng)};
        cplx sc = coherent_sc_element_plane(f, 0.0, X1, X2, 0.0, 0, hbar);
        PhasePoint d = X1 - X2;
        cplx overlap = std::exp(-norm2(d) / (4.0 * hbar)) *
                       std::polar(1.0, -0.5 / hbar * wedge(X1, X2));
        r0 = std::fmax(r0, std::abs(sc - overlap));
    }
    out.push_back(item("t=0 plane element reduces to the coherent overlap", r0, 1e-12));

    // damping tail: |t-t'| > T terms are negligible for the comparison geometry
    {
        TorusHilbert h(100);
        ScarParams p1 = make_scar_params(h, f.lambda, PhasePoint{0.0, 0.0});
        ScarParams p2 = make_scar_params(h, f.lambda, PhasePoint{0.5, 0.5});
        auto res = scar_sc_element(h, cat, p1, p2, 1, ScMode::ExactW);
        double total = std::abs(res.raw), tail = 0;
        for (auto& rec : res.breakdown)
            if (std::fabs(double(rec.tprime - 1)) > p1.T)
                tail += std::abs(rec.weight * rec.term);
        out.push_back(item("window tail |t-t'| > T below 1e-12 of total",
                           tail * std::sqrt(50.0) / total, 1e-12));
    }

    return out;
}

std::vector<SuiteResult> run_all_props(int N, unsigned seed, bool include_weyl) {
    std::vector<SuiteResult> all;
    for (auto& s : props_symplectic(seed)) all.push_back(s);
    for (auto& s : props_torus(N, seed, include_weyl)) all.push_back(s);
    for (auto& s : props_sc_engine(seed)) all.push_back(s);
    return all;
}

} // namespace scarmat
