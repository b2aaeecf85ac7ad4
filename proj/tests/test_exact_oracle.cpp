#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scarmat/cat_map.hpp"
#include "scarmat/exact_oracle.hpp"

using namespace scarmat;

TEST_CASE("coherent elements: normalization and bounds") {
    TorusHilbert h(64);
    cplx self = coherent_element_exact(h, {0.25, 0.75}, {0.25, 0.75}, 0);
    CHECK(std::abs(self - cplx(1.0)) < 1e-13);
    for (int t : {0, 1, 2}) {
        cplx v = coherent_element_exact(h, {0.0, 0.0}, {0.5, 0.5}, t);
        CHECK(std::abs(v) <= 1.0 + 1e-12);
    }
}

TEST_CASE("scar element consistency with the double time sum") {
    TorusHilbert h(64);
    CatMapSpec cat = default_cat();
    PropagatorPowers powers(cat_propagator(h));
    ScarParams p1 = make_scar_params(h, cat.frame.lambda, {0.0, 0.0}, TConvention::LogNOverLambda,
                                     0.15, false);
    ScarParams p2 = make_scar_params(h, cat.frame.lambda, {0.5, 0.5}, TConvention::LogNOverLambda,
                                     -0.4, false);
    const int t = 1;
    cplx direct = scar_element_exact(h, powers, p1, p2, t);

    // brute-force double sum over window times on raw coherent states
    CVector c1 = coherent_state(h, p1.X), c2 = coherent_state(h, p2.X);
    cplx brute = 0.0;
    for (int t1 = -p1.cutoff; t1 <= p1.cutoff; ++t1) {
        for (int t2 = -p2.cutoff; t2 <= p2.cutoff; ++t2) {
            CVector w = powers.apply(t + t2 - t1, c2);
            brute += std::polar(window(t1, p1.T) * window(t2, p2.T), p2.phi * t2 - p1.phi * t1) *
                     dense::vdot(c1, w);
        }
    }
    CHECK(std::abs(direct - brute) < 1e-13 * std::abs(brute));
}

TEST_CASE("conjugate symmetry under swapping the states and reversing time") {
    TorusHilbert h(100);
    CatMapSpec cat = default_cat();
    PropagatorPowers powers(cat_propagator(h));
    ScarParams p1 = make_scar_params(h, cat.frame.lambda, {0.0, 0.0}, TConvention::LogNOverLambda,
                                     0.3);
    ScarParams p2 = make_scar_params(h, cat.frame.lambda, {0.5, 0.5}, TConvention::LogNOverLambda,
                                     0.7);
    for (int t : {0, 1, 2}) {
        cplx a = scar_element_exact(h, powers, p1, p2, t);
        cplx b = scar_element_exact(h, powers, p2, p1, -t);
        CHECK(std::abs(a - std::conj(b)) < 1e-12);
    }
}

TEST_CASE("exact value at N=101 vanishes; N=100 overlap is real") {
    CatMapSpec cat = default_cat();
    {
        TorusHilbert h(101);
        PropagatorPowers powers(cat_propagator(h));
        ScarParams p1 = make_scar_params(h, cat.frame.lambda, {0.0, 0.0});
        ScarParams p2 = make_scar_params(h, cat.frame.lambda, {0.5, 0.5});
        CHECK(std::abs(scar_element_exact(h, powers, p1, p2, 0)) < 1e-10);
        CHECK(std::abs(scar_element_exact(h, powers, p1, p2, 1)) < 1e-10);
    }
    {
        TorusHilbert h(100);
        PropagatorPowers powers(cat_propagator(h));
        ScarParams p1 = make_scar_params(h, cat.frame.lambda, {0.0, 0.0});
        ScarParams p2 = make_scar_params(h, cat.frame.lambda, {0.5, 0.5});
        cplx ov = scar_element_exact(h, powers, p1, p2, 0);
        CHECK(std::fabs(ov.imag()) <= 1e-9 * std::fabs(ov.real()));
    }
}

TEST_CASE("nilpotent order") {
    TorusHilbert h1(1);
    auto o1 = nilpotent_order(cat_propagator(h1), 3);
    REQUIRE(o1.has_value());
    CHECK(o1->k == 1);

    TorusHilbert h5(5);
    CMatrix U = cat_propagator(h5);
    auto o5 = nilpotent_order(U, 15);
    REQUIRE(o5.has_value());
    CHECK(o5->k <= 15);
    CHECK(o5->residual <= 1e-10);
    // U^{2k} is scalar with doubled phase
    auto o10 = nilpotent_order(dense::matmul(*PropagatorPowers(U).power(o5->k),
                                             *PropagatorPowers(U).power(o5->k)),
                               1);
    REQUIRE(o10.has_value());
    double want = std::remainder(2.0 * o5->phase, 2.0 * std::acos(-1.0));
    CHECK(std::fabs(std::remainder(o10->phase - want, 2.0 * std::acos(-1.0))) < 1e-9);

    // a generic unitary is not scalar
    TorusHilbert h9(9);
    CHECK(!nilpotent_order(cat_propagator(h9), 2).has_value());
}
