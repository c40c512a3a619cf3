#pragma once

#include <array>
#include <string>

#include "tanglekit/errors.hpp"

// Exact arithmetic at the bracket's evaluation point A = e^{i pi/4}.
//
// A is a primitive 8th root of unity, so everything lives in the ring
// Z[A]/(A^4 + 1): four integer coefficients c0 + c1*A + c2*A^2 + c3*A^3.
// Closed-link brackets at this A are always an integer multiple of a single
// power of A ("p * A^k"); ZPhi is that canonical monomial form.

namespace tanglekit {

struct Zeta8 {
    std::array<i64, 4> c{0, 0, 0, 0}; // c[0] + c[1]A + c[2]A^2 + c[3]A^3

    static Zeta8 zero() { return Zeta8{}; }
    static Zeta8 one() { return Zeta8{{1, 0, 0, 0}}; }

    // A^e for any integer exponent (A^4 = -1, so A^8 = 1).
    static Zeta8 unit_power(i64 e);

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

    friend bool operator==(const Zeta8& a, const Zeta8& b) { return a.c == b.c; }
    friend bool operator!=(const Zeta8& a, const Zeta8& b) { return !(a == b); }
};

Zeta8 operator+(const Zeta8& a, const Zeta8& b);
Zeta8 operator-(const Zeta8& a, const Zeta8& b);
Zeta8 operator*(const Zeta8& a, const Zeta8& b);

// Add p * A^e into acc (the state-sum accumulator's inner loop).
void accumulate_power(Zeta8& acc, i64 p, i64 e);

// Canonical value p * A^k with p >= 0, k in 0..7, and k = 0 whenever p = 0.
struct ZPhi {
    i64 p = 0;
    int k = 0;

    Zeta8 to_zeta8() const;

    friend bool operator==(const ZPhi& a, const ZPhi& b) { return a.p == b.p && a.k == b.k; }
    friend bool operator!=(const ZPhi& a, const ZPhi& b) { return !(a == b); }
};

// Collapse a Zeta8 value to ZPhi. Well-defined exactly when at most one
// coefficient is nonzero (guaranteed for closed-link brackets); otherwise
// throws NotUnitMultiple.
ZPhi normalize_zphi(const Zeta8& v);

// "p*A^k", e.g. "2*A^6", "0*A^0".
std::string to_string(const ZPhi& v);

} // namespace tanglekit
