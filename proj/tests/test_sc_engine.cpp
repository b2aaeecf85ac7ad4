#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "scarmat/errors.hpp"
#include "scarmat/exact_oracle.hpp"
#include "scarmat/props.hpp"
#include "scarmat/sc_engine.hpp"

using namespace scarmat;

namespace {
constexpr double kPi = std::numbers::pi;
const CatMapSpec kCat = default_cat();
} // namespace

TEST_CASE("chain at t=0") {
    LinearizedChain c = chain_at(kCat.frame, 0.0);
    CHECK(max_abs_entry(c.B) == 0.0);
    CHECK(c.detM1 == doctest::Approx(4.0));
    CHECK(c.detV_mod == doctest::Approx(1.0));
    CHECK(c.epsilon == 0.0);
    CHECK(max_abs_entry(c.D) == doctest::Approx(0.0));
    // Cbar(0) = C, E(0) = C/4
    CHECK(max_abs_entry(c.Cbar - kCat.frame.gram) < 1e-14);
    CHECK(max_abs_entry(c.E - 0.25 * kCat.frame.gram) < 1e-14);
}

TEST_CASE("detV at t=1 from the printed closed form") {
    LinearizedChain c = chain_at(kCat.frame, 1.0);
    double tau = std::tanh(0.5 * kCat.frame.lambda);
    double d = kCat.frame.d();
    double want = std::sqrt((1 + tau * tau) * (1 + tau * tau) + 4 * d * d * tau * tau);
    CHECK(c.detV_mod == doctest::Approx(want).epsilon(1e-14));
    CHECK(tau == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(c.detV_mod == doctest::Approx(2.0 * std::sqrt(5.0) / 3.0).epsilon(1e-13));
    CHECK(c.epsilon == doctest::Approx(std::atan2(2 * d * tau, 1 + tau * tau)).epsilon(1e-14));
}

TEST_CASE("chain equals the generic matrix route (props item)") {
    for (auto& s : props_sc_engine(12345)) {
        INFO(s.name);
        CHECK(s.pass);
    }
}

TEST_CASE("point shift") {
    // xi0 = 0
    FrameCoords z = point_shift(kCat.frame, 1.0, {0.0, 0.0});
    CHECK(z.u == 0.0);
    CHECK(z.s == 0.0);

    // cat, t=1, cartesian xi0 = (-1/2, -1/2): delta = (0, 1/6) in cartesian
    FrameCoords xi = to_frame_coords(kCat.frame, {-0.5, -0.5});
    FrameCoords d = point_shift(kCat.frame, 1.0, xi);
    PhasePoint dc = from_frame_coords(kCat.frame, d);
    CHECK(dc.p == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(dc.q == doctest::Approx(1.0 / 6.0).epsilon(1e-13));

    // matches -(M^t+1)^{-1} xi0 for integer t
    Mat2 inv = (kCat.M.pow(2) + Mat2::identity()).inverse();
    PhasePoint want = -1.0 * (inv * PhasePoint{-0.5, -0.5});
    FrameCoords d2 = point_shift(kCat.frame, 2.0, xi);
    PhasePoint got = from_frame_coords(kCat.frame, d2);
    CHECK(std::sqrt(norm2(got - want)) < 1e-13);

    // unstable component of the shift dies as t -> +inf
    FrameCoords dlarge = point_shift(kCat.frame, 40.0, {1.0, 1.0});
    CHECK(std::fabs(dlarge.u) < 1e-12);
    CHECK(dlarge.s == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("mid-point action") {
    double hbar = 1.0 / (2.0 * kPi * 100);
    LinearizedChain c0 = chain_at(kCat.frame, 0.0);
    CHECK(action_mid(0.75, c0, {0.3, -0.2}, 0.0, 0, hbar) == 0.0);
    LinearizedChain c2 = chain_at(kCat.frame, 2.0);
    CHECK(action_mid(0.75, c2, {0.0, 0.0}, 2.0, 0, hbar) == doctest::Approx(1.5));
    // quadratic term equals the generic-path value xi' cayley(M^t) xi / 4
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t : {1, 2, 3, -2}) {
        SymMat2 Bc = cayley_of(kCat.M.pow(t));
        LinearizedChain c = chain_at(kCat.frame, double(t));
        for (int i = 0; i < 20; ++i) {
            PhasePoint xi{u(rng), u(rng)};
            FrameCoords f = to_frame_coords(kCat.frame, xi);
            double got = action_mid(0.0, c, f, double(t), 0, hbar);
            double want = 0.25 * Bc.quad(xi);
            CHECK(std::fabs(got - want) < 1e-11);
        }
    }
    // Morse term: alpha enters as t * hbar * pi/2 * alpha
    CHECK(action_mid(0.0, c2, {0.0, 0.0}, 2.0, 3, hbar) ==
          doctest::Approx(2.0 * hbar * 0.5 * kPi * 3).epsilon(1e-14));
}

TEST_CASE("plane element reduces to the coherent overlap at t=0") {
    double hbar = 1.0 / (2.0 * kPi * 64);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (int i = 0; i < 50; ++i) {
        PhasePoint X1{u(rng), u(rng)}, X2{u(rng), u(rng)};
        cplx sc = coherent_sc_element_plane(kCat.frame, 0.0, X1, X2, 0.0, 0, hbar);
        PhasePoint d = X1 - X2;
        cplx want = std::exp(-norm2(d) / (4 * hbar)) *
                    std::polar(1.0, -0.5 / hbar * wedge(X1, X2));
        CHECK(std::abs(sc - want) < 1e-12);
    }
}

TEST_CASE("fixed-point diagonal plane element has the stated modulus and phase") {
    double hbar = 1.0 / (2.0 * kPi * 100);
    for (double t : {1.0, 2.0, 3.5}) {
        LinearizedChain c = chain_at(kCat.frame, t);
        cplx v = coherent_sc_element_plane(kCat.frame, t, {0, 0}, {0, 0}, 0.0, 0, hbar);
        CHECK(std::abs(v) == doctest::Approx(2.0 / std::sqrt(c.detV_mod * c.detM1)).epsilon(1e-12));
        CHECK(std::arg(v) == doctest::Approx(-0.5 * c.epsilon).epsilon(1e-12));
    }
}

TEST_CASE("torus periodization: kmax sweep converges and matches the vector overlap") {
    TorusHilbert h(100);
    auto plane = [&](PhasePoint a, PhasePoint b) -> cplx {
        PhasePoint d = a - b;
        return std::exp(-norm2(d) / (4 * h.hbar)) * std::polar(1.0, -0.5 / h.hbar * wedge(a, b));
    };
    PhasePoint X1{0.0, 0.0}, X2{0.5, 0.5};
    cplx p2 = torus_periodize(plane, X1, X2, 2, h);
    cplx p3 = torus_periodize(plane, X1, X2, 3, h);
    cplx p4 = torus_periodize(plane, X1, X2, 4, h);
    CHECK(std::abs(p3 - p2) < 1e-12);
    CHECK(std::abs(p4 - p3) < 1e-12);

    CVector v1 = coherent_state(h, X1), v2 = coherent_state(h, X2);
    CHECK(std::abs(p3 - dense::vdot(v1, v2)) < 1e-10);

    // X1 = X2, t = 0, normalized -> 1
    double n2 = sc_coherent_norm2(h, kCat, X1);
    cplx diag = torus_periodize(plane, X1, X1, 3, h);
    CHECK(std::abs(diag / n2 - cplx(1.0)) < 1e-12);
}

TEST_CASE("adaptive image selection agrees with the box where both apply") {
    TorusHilbert h(100);
    double S2 = fixed_point_action(kCat, {0.5, 0.5});
    for (int t : {0, 1, 2}) {
        auto elem = [&](PhasePoint a, PhasePoint b) -> cplx {
            return coherent_sc_element_plane(kCat.frame, double(t), a, b, S2, 0, h.hbar);
        };
        cplx box = torus_periodize(elem, {0, 0}, {0.5, 0.5}, 8, h);
        cplx strip = sc_coherent_torus(h, kCat, t, {0, 0}, {0.5, 0.5}, S2) *
                     std::polar(1.0, -0.5 * kPi * t); // undo the propagator phase convention
        CHECK(std::abs(box - strip) < 1e-12 * std::fmax(1.0, std::abs(box)));
    }
}

TEST_CASE("periodized SC coherent elements are exact for the quantized map") {
    // the linear-map exactness statement, against the quad-precision oracle
    for (int N : {100, 101}) {
        TorusHilbert h(N);
        double S2 = fixed_point_action(kCat, {0.5, 0.5});
        double n1 = std::sqrt(sc_coherent_norm2(h, kCat, {0, 0}));
        double n2 = std::sqrt(sc_coherent_norm2(h, kCat, {0.5, 0.5}));
        for (int t : {0, 1, 2}) {
            cplx sc = sc_coherent_torus(h, kCat, t, {0, 0}, {0.5, 0.5}, S2) / (n1 * n2);
            cplx exact = coherent_element_exact(h, {0, 0}, {0.5, 0.5}, t);
            CHECK(std::abs(sc - exact) <= 1e-8 * std::fmax(std::abs(exact), 1e-12));
        }
        // diagonal case, both points
        for (int t : {1, 3}) {
            cplx sc = sc_coherent_torus(h, kCat, t, {0, 0}, {0, 0}, 0.0) / (n1 * n1);
            cplx exact = coherent_element_exact(h, {0, 0}, {0, 0}, t);
            CHECK(std::abs(sc - exact) <= 1e-9 * std::abs(exact));
        }
    }
}

TEST_CASE("amplitude A") {
    CHECK(amplitude_A(3.0, 0.5, 0.5) == doctest::Approx(3.0 * std::sqrt(kPi / 2)).epsilon(1e-14));
    double T = 4.0, dphi = std::sqrt(32.0) / T;
    CHECK(amplitude_A(T, 0.0, dphi) ==
          doctest::Approx(std::exp(-1.0) * T * std::sqrt(kPi / 2)).epsilon(1e-13));
    CHECK(amplitude_A(2.5, 0.3, 0.9) == amplitude_A(2.5, 0.9, 0.3));
}

TEST_CASE("discrete window weight: brute force and symmetry") {
    const double T = 3.3;
    const int cutoff = 4;
    const double phi1 = 0.22, phi2 = -0.57;

    // W(t, t) at equal phases is the positive sum of squared windows
    cplx w0 = discrete_window_weight(2, 2, 0.0, 0.0, T, cutoff);
    CHECK(w0.imag() == doctest::Approx(0.0));
    CHECK(w0.real() > 0.0);

    // sum_tR W(t,tR) G(tR) equals the direct double sum for arbitrary G
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::map<int, cplx> G;
    for (int tR = -20; tR <= 20; ++tR) G[tR] = cplx(u(rng), u(rng));
    for (int t : {0, 1, 3}) {
        cplx direct = 0.0;
        for (int t1 = -cutoff; t1 <= cutoff; ++t1)
            for (int t2 = -cutoff; t2 <= cutoff; ++t2)
                direct += std::polar(window(t1, T) * window(t2, T), phi2 * t2 - phi1 * t1) *
                          G[t + t2 - t1];
        cplx viaW = 0.0;
        for (int tR = t - 2 * cutoff; tR <= t + 2 * cutoff; ++tR)
            viaW += discrete_window_weight(t, tR, phi1, phi2, T, cutoff) * G[tR];
        CHECK(std::abs(direct - viaW) < 1e-14 * std::abs(direct));
    }
}

TEST_CASE("window weight approaches the continuum collapse for large T") {
    // For wide windows the discrete sum approaches the continuum integral
    //   (T/4) sqrt(pi/2) e^{-T^2 dphi^2/128} e^{i (phi1+phi2) D / 2} e^{-8 D^2/T^2},
    // scaled relative to the printed A-form by the Jacobian of the
    // (t1,t2) -> (ts,tr) change of variables.
    const double phi1 = 0.08, phi2 = 0.13;
    double prev = 1e9;
    for (double T : {8.0, 16.0, 32.0}) {
        int cutoff = int(std::ceil(T / 2)) + 2;
        double worst = 0;
        for (int D : {-3, -1, 0, 2}) {
            cplx W = discrete_window_weight(0, D, phi1, phi2, T, cutoff);
            double dphi = phi2 - phi1;
            cplx cont = 0.25 * T * std::sqrt(kPi / 2) * std::exp(-T * T * dphi * dphi / 128.0) *
                        std::polar(std::exp(-8.0 * D * D / (T * T)), 0.5 * (phi1 + phi2) * D);
            worst = std::fmax(worst, std::abs(W - cont) / std::abs(cont));
        }
        CHECK(worst < prev);
        prev = worst;
    }
    CHECK(prev < 2e-3);
}

TEST_CASE("scar SC element: structural cases") {
    CatMapSpec cat = default_cat();

    // not a fixed point
    TorusHilbert h32(32);
    ScarParams bad = make_scar_params(h32, cat.frame.lambda, {0.25, 0.25});
    ScarParams good = make_scar_params(h32, cat.frame.lambda, {0.0, 0.0});
    CHECK_THROWS_AS(scar_sc_element(h32, cat, bad, good, 0, ScMode::ExactW), NotFixedPoint);

    // N = 101: elements vanish in both modes
    TorusHilbert h(101);
    ScarParams p1 = make_scar_params(h, cat.frame.lambda, {0.0, 0.0});
    ScarParams p2 = make_scar_params(h, cat.frame.lambda, {0.5, 0.5});
    for (auto mode : {ScMode::ExactW, ScMode::PaperA}) {
        auto r = scar_sc_element(h, cat, p1, p2, 0, mode);
        CHECK(std::abs(r.raw) < 1e-10);
        r = scar_sc_element(h, cat, p1, p2, 1, mode);
        CHECK(std::abs(r.raw) < 1e-10);
    }
}

TEST_CASE("scar SC element equals the exact oracle in exactW mode") {
    CatMapSpec cat = default_cat();
    TorusHilbert h(100);
    PropagatorPowers powers(cat_propagator(h));
    ScarParams p1 = make_scar_params(h, cat.frame.lambda, {0.0, 0.0});
    ScarParams p2 = make_scar_params(h, cat.frame.lambda, {0.5, 0.5});
    for (int t : {0, 1}) {
        cplx exact = scar_element_exact(h, powers, p1, p2, t);
        auto sc = scar_sc_element(h, cat, p1, p2, t, ScMode::ExactW);
        CHECK(std::abs(sc.value - exact) <= 1e-8 * std::abs(exact));
    }
}

TEST_CASE("breakdown terms respect the damping bound and the window tail") {
    CatMapSpec cat = default_cat();
    TorusHilbert h(100);
    ScarParams p1 = make_scar_params(h, cat.frame.lambda, {0.0, 0.0});
    ScarParams p2 = make_scar_params(h, cat.frame.lambda, {0.5, 0.5});
    auto r = scar_sc_element(h, cat, p1, p2, 1, ScMode::ExactW);
    REQUIRE(!r.breakdown.empty());
    double total = std::abs(r.raw);
    for (auto& rec : r.breakdown) {
        CHECK(std::abs(rec.term) <=
              2.0 * rec.gauss_damp / std::sqrt(rec.chain.detV_mod * rec.chain.detM1) + 1e-15);
        if (std::fabs(double(rec.tprime - 1)) > p1.T)
            CHECK(std::abs(rec.weight * rec.term) * std::sqrt(50.0) < 1e-12 * total);
    }
    // dominant t' is t for the diagonal element
    auto rd = scar_sc_element(h, cat, p2, p2, 1, ScMode::ExactW);
    const ScTermRecord* best = nullptr;
    for (auto& rec : rd.breakdown)
        if (!best || std::abs(rec.weight * rec.term) > std::abs(best->weight * best->term))
            best = &rec;
    REQUIRE(best != nullptr);
    CHECK(best->tprime == 1);
}

TEST_CASE("paperA stays within a few percent of exactW on the table geometry") {
    CatMapSpec cat = default_cat();
    TorusHilbert h(100);
    ScarParams p1 = make_scar_params(h, cat.frame.lambda, {0.0, 0.0});
    ScarParams p2 = make_scar_params(h, cat.frame.lambda, {0.5, 0.5});
    for (int t : {0, 1}) {
        auto w = scar_sc_element(h, cat, p1, p2, t, ScMode::ExactW);
        auto a = scar_sc_element(h, cat, p1, p2, t, ScMode::PaperA);
        CHECK(std::abs(a.value - w.value) / std::abs(w.value) <= 5e-2);
    }
}
