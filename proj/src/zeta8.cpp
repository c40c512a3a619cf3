#include "tanglekit/zeta8.hpp"

namespace tanglekit {

Zeta8 Zeta8::unit_power(i64 e) {
    int r = static_cast<int>(((e % 8) + 8) % 8);
    Zeta8 out;
    out.c[r % 4] = (r < 4) ? 1 : -1;
    return out;
}

Zeta8 operator+(const Zeta8& a, const Zeta8& b) {
    Zeta8 out;
    for (int i = 0; i < 4; ++i)
        out.c[i] = checked_add(a.c[i], b.c[i]);
    return out;
}

Zeta8 operator-(const Zeta8& a, const Zeta8& b) {
    Zeta8 out;
    for (int i = 0; i < 4; ++i)
        out.c[i] = checked_sub(a.c[i], b.c[i]);
    return out;
}

Zeta8 operator*(const Zeta8& a, const Zeta8& b) {
    // Convolution with the reduction A^4 = -1: the degree-(i+j) term flips
    // sign when it wraps past 3.
    Zeta8 out;
    for (int i = 0; i < 4; ++i) {
        if (a.c[i] == 0)
            continue;
        for (int j = 0; j < 4; ++j) {
            if (b.c[j] == 0)
                continue;
            i64 term = checked_mul(a.c[i], b.c[j]);
            int d = i + j;
            if (d >= 4) {
                d -= 4;
                term = checked_neg(term);
            }
            out.c[d] = checked_add(out.c[d], term);
        }
    }
    return out;
}

void accumulate_power(Zeta8& acc, i64 p, i64 e) {
    int r = static_cast<int>(((e % 8) + 8) % 8);
    i64 term = (r < 4) ? p : checked_neg(p);
    acc.c[r % 4] = checked_add(acc.c[r % 4], term);
}

Zeta8 ZPhi::to_zeta8() const {
    Zeta8 out;
    accumulate_power(out, p, k);
    return out;
}

ZPhi normalize_zphi(const Zeta8& v) {
    int nonzero = -1;
    for (int i = 0; i < 4; ++i) {
        if (v.c[i] != 0) {
            if (nonzero >= 0)
                throw NotUnitMultiple("value is not an integer multiple of a single power of A");
            nonzero = i;
        }
    }
    if (nonzero < 0)
        return ZPhi{0, 0};
    i64 coeff = v.c[nonzero];
    if (coeff > 0)
        return ZPhi{coeff, nonzero};
    return ZPhi{checked_neg(coeff), nonzero + 4}; // -A^i = A^(i+4)
}

std::string to_string(const ZPhi& v) {
    return std::to_string(v.p) + "*A^" + std::to_string(v.k);
}

} // namespace tanglekit
