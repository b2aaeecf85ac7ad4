#include "scarmat/cat_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scarmat/errors.hpp"

namespace scarmat {

CatMapSpec make_cat(Mat2 M) {
    CatMapSpec spec;
    spec.M = M;
    spec.B = cayley_of(M);
    spec.frame = frame_from_map(M);
    return spec;
}

CatMapSpec default_cat() { return make_cat(Mat2{2, 3, 1, 2}); }

PhasePoint iterate(const CatMapSpec& spec, PhasePoint x, long n) {
    Mat2 A = n >= 0 ? spec.M : spec.M.inverse();
    long steps = n >= 0 ? n : -n;
    for (long i = 0; i < steps; ++i) x = mod1(A * x);
    return x;
}

PhasePoint periodic_point(const CatMapSpec& spec, long l, Winding m) {
    Mat2 Ml = spec.M.pow(l) - Mat2::identity();
    if (std::fabs(Ml.det()) < 1e-12)
        throw DegenerateMap("periodic_point: det(M^l - 1) = 0 for l = " + std::to_string(l));
    PhasePoint x = Ml.inverse() * PhasePoint{double(m.mp), double(m.mq)};
    return mod1(x);
}

std::vector<PhasePoint> periodic_points(const CatMapSpec& spec, long l) {
    Mat2 Ml = spec.M.pow(l) - Mat2::identity();
    if (std::fabs(Ml.det()) < 1e-12)
        throw DegenerateMap("periodic_points: det(M^l - 1) = 0 for l = " + std::to_string(l));

    // m ranges over the integer box implied by (M^l - 1)[0,1)^2.
    auto corner = [&](double p, double q) { return Ml * PhasePoint{p, q}; };
    PhasePoint c[4] = {corner(0, 0), corner(1, 0), corner(0, 1), corner(1, 1)};
    long pmin = 0, pmax = 0, qmin = 0, qmax = 0;
    for (auto& v : c) {
        pmin = std::min(pmin, (long)std::floor(v.p));
        pmax = std::max(pmax, (long)std::ceil(v.p));
        qmin = std::min(qmin, (long)std::floor(v.q));
        qmax = std::max(qmax, (long)std::ceil(v.q));
    }

    std::vector<PhasePoint> pts;
    for (long mp = pmin; mp <= pmax; ++mp) {
        for (long mq = qmin; mq <= qmax; ++mq) {
            PhasePoint x = periodic_point(spec, l, Winding{mp, mq});
            bool dup = false;
            for (auto& y : pts)
                if (torus_dist(x, y) < 1e-9) { dup = true; break; }
            if (!dup) pts.push_back(x);
        }
    }
    std::sort(pts.begin(), pts.end(), [](PhasePoint a, PhasePoint b) {
        return a.p < b.p || (a.p == b.p && a.q < b.q);
    });
    return pts;
}

double generating_action(const CatMapSpec& spec, PhasePoint x, Winding m) {
    PhasePoint mv{double(m.mp), double(m.mq)};
    Mat2 B = spec.B.as_mat2();
    Mat2 BmJ = B - symplectic_J();
    Mat2 BpJt = B + mirror_Jtilde();
    return spec.B.quad(x) + dot(x, BmJ * mv) + 0.25 * dot(mv, BpJt * mv);
}

PhasePoint chord_at(const CatMapSpec& spec, PhasePoint x, Winding m) {
    PhasePoint mv{double(m.mp), double(m.mq)};
    Mat2 Mp1inv = (spec.M + Mat2::identity()).inverse();
    return 2.0 * (Mp1inv * ((spec.M - Mat2::identity()) * x - mv));
}

bool is_fixed_point(const CatMapSpec& spec, PhasePoint X, double tol) {
    return torus_dist(iterate(spec, X, 1), X) < tol;
}

Winding fixed_point_winding(const CatMapSpec& spec, PhasePoint X) {
    PhasePoint m = (spec.M - Mat2::identity()) * X;
    return {(long)std::llround(m.p), (long)std::llround(m.q)};
}

double fixed_point_action(const CatMapSpec& spec, PhasePoint X) {
    if (!is_fixed_point(spec, X))
        throw NotPeriodic("fixed_point_action: point is not fixed mod 1");
    return generating_action(spec, X, fixed_point_winding(spec, X));
}

} // namespace scarmat
