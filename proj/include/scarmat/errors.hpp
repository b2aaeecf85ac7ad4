#pragma once

#include <stdexcept>
#include <string>

namespace scarmat {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// det(M+1) vanished: the Cayley transform does not exist at a caustic.
struct CausticError : Error {
    explicit CausticError(const std::string& msg) : Error(msg) {}
};

// |trace| <= 2: no real hyperbolic eigen-frame.
struct NotHyperbolic : Error {
    explicit NotHyperbolic(const std::string& msg) : Error(msg) {}
};

// det(M^l - 1) = 0: periodic points of period l are not isolated.
struct DegenerateMap : Error {
    explicit DegenerateMap(const std::string& msg) : Error(msg) {}
};

struct NotPeriodic : Error {
    explicit NotPeriodic(const std::string& msg) : Error(msg) {}
};

struct NotFixedPoint : Error {
    explicit NotFixedPoint(const std::string& msg) : Error(msg) {}
};

// Reflection operators and the Weyl lattice are defined for odd N only.
struct EvenNUnsupported : Error {
    explicit EvenNUnsupported(const std::string& msg) : Error(msg) {}
};

struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& msg) : Error(msg) {}
};

} // namespace scarmat
