#pragma once

#include <stdexcept>
#include <string>

namespace fusionq {

/// A rational function was evaluated at one of its poles
/// ("pole at t=0", "evaluation pole", "specialization pole").
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A fusion factor F_i(a, b) whose denominator a^{-1} b - 1 vanishes
/// identically.
class SingularFactorError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The fused product failed to be regular at t = 0.
class RegularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fusionq
