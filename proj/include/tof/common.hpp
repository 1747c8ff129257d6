#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tof {

using cplx = std::complex<double>;

inline constexpr double pi      = 3.14159265358979323846264338327950288;
inline constexpr double two_pi  = 6.28318530717958647692528676655900577;
inline constexpr double sqrt_pi = 1.77245385090551602729816748334114518;
inline constexpr double sqrt_two_pi = 2.50662827463100050241576528481104525;

// Gamma at the half-integer and quarter-integer points used by the closed forms.
inline constexpr double gamma_1_4 = 3.62560990822190831193068515586767200;
inline constexpr double gamma_3_4 = 1.22541670246517764512909830336289053;
inline constexpr double gamma_5_4 = 0.90640247705547707798267867308874800;
inline constexpr double gamma_3_2 = 0.88622692545275801364908374167057259;

// exp of a complex exponent with underflow short-circuit: exp(-1000+ix) is a
// clean 0 instead of a denormal-times-phase mess.
inline cplx exp_c(cplx w) {
    if (w.real() < -745.0) return {0.0, 0.0};
    return std::exp(w);
}

inline int sgn(double x) { return (x > 0.0) - (x < 0.0); }

struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};
struct DivergentIntegral : std::runtime_error {
    explicit DivergentIntegral(const std::string& what) : std::runtime_error(what) {}
};
struct SingularityNotRegularized : std::runtime_error {
    explicit SingularityNotRegularized(const std::string& what) : std::runtime_error(what) {}
};
struct InsufficientTailCoverage : std::runtime_error {
    explicit InsufficientTailCoverage(const std::string& what) : std::runtime_error(what) {}
};
struct NotRightMoving : std::runtime_error {
    explicit NotRightMoving(const std::string& what) : std::runtime_error(what) {}
};
struct GridMismatch : std::runtime_error {
    explicit GridMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct NodeEncountered : std::runtime_error {
    explicit NodeEncountered(const std::string& what) : std::runtime_error(what) {}
};
struct UnsupportedFamily : std::runtime_error {
    explicit UnsupportedFamily(const std::string& what) : std::runtime_error(what) {}
};

// Error-function wrapper so every module draws it from one place.
inline double erf(double x)  { return std::erf(x); }
inline double erfc(double x) { return std::erfc(x); }

}  // namespace tof
