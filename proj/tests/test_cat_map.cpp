#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "scarmat/cat_map.hpp"
#include "scarmat/errors.hpp"

using namespace scarmat;

namespace {
bool contains(const std::vector<PhasePoint>& pts, PhasePoint x) {
    for (auto& y : pts)
        if (torus_dist(x, y) < 1e-10) return true;
    return false;
}
} // namespace

TEST_CASE("default cat spec") {
    CatMapSpec c = default_cat();
    CHECK(c.B.xx == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(c.B.xy == doctest::Approx(0.0));
    CHECK(c.B.yy == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((c.M + Mat2::identity()).det() == doctest::Approx(6.0));
    // 4 cosh^2(lambda/2) = |det(M+1)| for the hyperbolic frame
    double lam = c.frame.lambda;
    CHECK(4.0 * std::cosh(lam / 2) * std::cosh(lam / 2) == doctest::Approx(6.0).epsilon(1e-13));
    CHECK(c.M.det() == doctest::Approx(1.0));
    CHECK(c.morse_alpha == 0);
}

TEST_CASE("iteration mod 1") {
    CatMapSpec c = default_cat();
    for (long n : {-3L, -1L, 0L, 1L, 5L}) {
        PhasePoint z = iterate(c, {0, 0}, n);
        CHECK(torus_dist(z, {0, 0}) < 1e-12);
    }
    CHECK(torus_dist(iterate(c, {0.0, 0.5}, 1), {0.5, 0.0}) < 1e-12);
    CHECK(torus_dist(iterate(c, {0.5, 1.0 / 6.0}, 2), {0.5, 1.0 / 6.0}) < 1e-12);
    // forward then backward is the identity
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        PhasePoint x{u(rng), u(rng)};
        CHECK(torus_dist(iterate(c, iterate(c, x, 3), -3), x) < 1e-10);
    }
}

TEST_CASE("periodic points: fixed points and period 2") {
    CatMapSpec c = default_cat();
    CHECK(torus_dist(periodic_point(c, 1, {0, 0}), {0, 0}) < 1e-14);

    auto fixed = periodic_points(c, 1);
    CHECK(fixed.size() == 2);
    CHECK(contains(fixed, {0, 0}));
    CHECK(contains(fixed, {0.5, 0.5}));

    auto per2 = periodic_points(c, 2);
    // 2 fixed + 5 orbits of period 2
    CHECK(per2.size() == 12);
    CHECK(contains(per2, {0.0, 1.0 / 3.0}));
    CHECK(contains(per2, {0.0, 2.0 / 3.0}));
    CHECK(contains(per2, {0.0, 0.5}));
    CHECK(contains(per2, {0.5, 0.0}));
    CHECK(contains(per2, {0.5, 1.0 / 6.0}));
    CHECK(contains(per2, {0.5, 5.0 / 6.0}));
    CHECK(contains(per2, {0.0, 1.0 / 6.0}));
    CHECK(contains(per2, {0.5, 2.0 / 6.0}));
    CHECK(contains(per2, {0.0, 5.0 / 6.0}));
    CHECK(contains(per2, {0.5, 4.0 / 6.0}));

    for (auto& x : per2) CHECK(torus_dist(iterate(c, x, 2), x) < 1e-12);
}

TEST_CASE("generating action values") {
    CatMapSpec c = default_cat();
    CHECK(generating_action(c, {0, 0}, {0, 0}) == 0.0);
    CHECK(generating_action(c, {0.5, 0.5}, {2, 1}) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("chord from the analytic gradient matches the explicit map") {
    CatMapSpec c = default_cat();
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 2.0);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        PhasePoint x{u(rng), u(rng)};
        for (long mp = -1; mp <= 1; ++mp) {
            for (long mq = -1; mq <= 1; ++mq) {
                Winding m{mp, mq};
                // central finite differences of S, step 1e-5
                const double s = 1e-5;
                double dp = (generating_action(c, {x.p + s, x.q}, m) -
                             generating_action(c, {x.p - s, x.q}, m)) / (2 * s);
                double dq = (generating_action(c, {x.p, x.q + s}, m) -
                             generating_action(c, {x.p, x.q - s}, m)) / (2 * s);
                // xi = -J dS/dx with dS/dx = (dp, dq)
                PhasePoint fd{dq, -dp};
                PhasePoint an = chord_at(c, x, m);
                worst = std::fmax(worst, std::sqrt(norm2(fd - an)));
                // chord consistency with the unfolded map: xi solves
                // x + xi/2 = M(x - xi/2) - m
                PhasePoint lhs = x + 0.5 * an;
                PhasePoint rhs = c.M * (x - 0.5 * an) - PhasePoint{double(mp), double(mq)};
                CHECK(std::sqrt(norm2(lhs - rhs)) < 1e-10);
            }
        }
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("fixed point actions") {
    CatMapSpec c = default_cat();
    CHECK(fixed_point_action(c, {0, 0}) == 0.0);
    CHECK(fixed_point_action(c, {0.5, 0.5}) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK_THROWS_AS(fixed_point_action(c, {0.3, 0.3}), NotPeriodic);
    // t-step action of a fixed point is t times the per-step value
    double s1 = fixed_point_action(c, {0.5, 0.5});
    double s3 = 0;
    for (int i = 0; i < 3; ++i) s3 += s1;
    CHECK(s3 == doctest::Approx(3.0 * s1));
}

TEST_CASE("winding of the half-half fixed point") {
    CatMapSpec c = default_cat();
    Winding m = fixed_point_winding(c, {0.5, 0.5});
    CHECK(m.mp == 2);
    CHECK(m.mq == 1);
}

TEST_CASE("degenerate period rejected") {
    // M = [[1,1],[0,1]] is parabolic: det(M-1) = 0; build a spec around the cat
    // but query an impossible period via a crafted matrix
    CatMapSpec c = default_cat();
    // det(M^l - 1) never vanishes for hyperbolic M; craft the error through l = 0
    CHECK_THROWS_AS(periodic_point(c, 0, {0, 0}), DegenerateMap);
}
