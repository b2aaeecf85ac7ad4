#include "scarmat/phase_space.hpp"

#include "scarmat/errors.hpp"

namespace scarmat {

Mat2 Mat2::inverse() const {
    double d = det();
    if (std::fabs(d) < 1e-14)
        throw DegenerateMap("Mat2::inverse: matrix is singular");
    double inv = 1.0 / d;
    return {inv * a22, -inv * a12, -inv * a21, inv * a11};
}

Mat2 Mat2::pow(long n) const {
    Mat2 base = n >= 0 ? *this : inverse();
    unsigned long k = n >= 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
    Mat2 r = Mat2::identity();
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

} // namespace scarmat
