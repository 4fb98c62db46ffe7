#pragma once

#include <stdexcept>
#include <string>

namespace quasigap {

// Base for every library-thrown error. The CLI maps these onto exit codes:
// singular/ambiguous decisions -> 3, everything else (bad input, rejected
// configuration) -> 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : Error {
    using Error::Error;
};

// Comparison of two surds that do not lie in a common quadratic field.
struct MixedFields : Error {
    using Error::Error;
};

// In rational-surrogate mode: two compared values differ by less than
// 2^-precision_bits, so the true comparison cannot be decided.
struct AmbiguousComparison : Error {
    using Error::Error;
};

// A lattice point landed exactly on the window boundary; the shift is not
// regular.
struct SingularShift : Error {
    using Error::Error;
};

// patch_at_internal was given a point lying on a wall of sing_i(r).
struct OnSingularSet : Error {
    using Error::Error;
};

struct NotTotallyIrrational : Error {
    using Error::Error;
};

struct DegenerateWindow : Error {
    using Error::Error;
};

struct BadF0 : Error {
    using Error::Error;
};

struct SingularF0 : Error {
    using Error::Error;
};

struct RationalAlpha : Error {
    using Error::Error;
};

struct DegenerateBeta : Error {
    using Error::Error;
};

struct RelationFound : Error {
    using Error::Error;
};

}  // namespace quasigap
