#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

// Error taxonomy and checked 64-bit arithmetic.
//
// All arithmetic in this library is exact: diagram brackets live in
// Z[A]/(A^4+1) and invariants are integer matrices modulo global sign.
// Entries are int64 with explicit overflow detection -- desk-scale inputs
// never get close, but a silent wrap would corrupt an exact invariant, so
// overflow fails loudly instead.

namespace tanglekit {

struct TangleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// parse / validation
struct SyntaxError : TangleError {
    using TangleError::TangleError;
};
struct DegreeError : TangleError {
    using TangleError::TangleError;
};
struct ArityError : TangleError {
    using TangleError::TangleError;
};

// bracket engine
struct TooManyCrossings : TangleError {
    using TangleError::TangleError;
};
struct NotUnitMultiple : TangleError {
    using TangleError::TangleError;
};
struct OverflowError : TangleError {
    using TangleError::TangleError;
};

// invariant engine
struct TooManyHoles : TangleError {
    using TangleError::TangleError;
};
struct NoIntegerNormalization : TangleError {
    using TangleError::TangleError;
};

// matrix algebra
struct ShapeError : TangleError {
    using TangleError::TangleError;
};
struct LengthMismatch : TangleError {
    using TangleError::TangleError;
};
struct IndexError : TangleError {
    using TangleError::TangleError;
};
struct ArityMismatch : TangleError {
    using TangleError::TangleError;
};

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline i64 checked_neg(i64 a) {
    return checked_sub(0, a);
}

} // namespace tanglekit
