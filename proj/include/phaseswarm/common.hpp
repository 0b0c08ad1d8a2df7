#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phaseswarm {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Branch-enumeration operations refuse to expand more than 2^kEnumerationCap
/// measurement records.
inline constexpr int kEnumerationCap = 16;

/// Largest total photon number accepted by input-state construction.
inline constexpr int kMaxPhotons = 20;

/// Thrown when an operation would exceed a hard resource cap (e.g. the 2^m
/// outcome enumeration).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reduce an angle to [0, 2*pi).
inline double wrap_two_pi(double x) {
    double r = std::fmod(x, two_pi);
    if (r < 0.0) r += two_pi;
    // adding two_pi to a tiny negative remainder can round up to two_pi itself
    return r < two_pi ? r : 0.0;
}

}  // namespace phaseswarm
