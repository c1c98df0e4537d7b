#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>

#include "aidct/bigreal.hpp"
#include "aidct/checked.hpp"

namespace aidct {

/**
 * Z4Element: an element of the ring Z[z1, z2] with
 *
 *   z1 = sqrt(2 + sqrt 2) + sqrt(2 - sqrt 2)
 *   z2 = sqrt(2 + sqrt 2) - sqrt(2 - sqrt 2)
 *
 * stored as four integer coordinates (a, b, c, d) over the basis
 * {1, z1, z2, z1*z2}. The basis is linearly independent over the rationals,
 * so two elements are equal as reals iff their coordinates are equal.
 * All arithmetic is exact; coordinate overflow throws.
 */
struct Z4Element {
    std::int64_t a = 0;  // coordinate of 1
    std::int64_t b = 0;  // coordinate of z1
    std::int64_t c = 0;  // coordinate of z2
    std::int64_t d = 0;  // coordinate of z1*z2

    static Z4Element from_int(std::int64_t m) { return {m, 0, 0, 0}; }

    bool operator==(const Z4Element&) const = default;

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    std::int64_t coord(int q) const {
        switch (q) {
            case 0: return a;
            case 1: return b;
            case 2: return c;
            default: return d;
        }
    }

    friend Z4Element operator+(const Z4Element& x, const Z4Element& y) {
        return {checked_add(x.a, y.a), checked_add(x.b, y.b),
                checked_add(x.c, y.c), checked_add(x.d, y.d)};
    }

    friend Z4Element operator-(const Z4Element& x, const Z4Element& y) {
        return {checked_sub(x.a, y.a), checked_sub(x.b, y.b),
                checked_sub(x.c, y.c), checked_sub(x.d, y.d)};
    }

    Z4Element operator-() const {
        return {checked_neg(a), checked_neg(b), checked_neg(c), checked_neg(d)};
    }

    // Multiplication by 2^k (a wired shift in hardware).
    Z4Element shifted_left(int k) const {
        return {checked_shl(a, k), checked_shl(b, k), checked_shl(c, k), checked_shl(d, k)};
    }

    friend Z4Element operator*(const Z4Element& x, const Z4Element& y);
};

/**
 * Ring product. The bilinear coordinate form follows from expanding the
 * basis products with the identities
 *
 *   z1^2      = 4 + z1*z2
 *   z2^2      = 4 - z1*z2
 *   z1^2*z2   = 2*(z1 + z2)
 *   z1*z2^2   = 2*(z1 - z2)
 *   z1^2*z2^2 = 8
 *
 * which give, for x = (a1,b1,c1,d1) and y = (a2,b2,c2,d2):
 *
 *   r.a = a1*a2 + 4*(b1*b2 + c1*c2) + 8*d1*d2
 *   r.b = a1*b2 + b1*a2 + 2*(b1*d2 + d1*b2) + 2*(c1*d2 + d1*c2)
 *   r.c = a1*c2 + c1*a2 + 2*(b1*d2 + d1*b2) - 2*(c1*d2 + d1*c2)
 *   r.d = a1*d2 + d1*a2 + b1*c2 + c1*b2 + b1*b2 - c1*c2
 *
 * Note the bivariate basis is not closed under naive polynomial-modular
 * multiplication; the reduction above has to be applied explicitly.
 */
inline Z4Element operator*(const Z4Element& x, const Z4Element& y) {
    const std::int64_t bd = checked_add(checked_mul(x.b, y.d), checked_mul(x.d, y.b));
    const std::int64_t cd = checked_add(checked_mul(x.c, y.d), checked_mul(x.d, y.c));

    std::int64_t ra = checked_mul(x.a, y.a);
    ra = checked_add(ra, checked_shl(checked_add(checked_mul(x.b, y.b), checked_mul(x.c, y.c)), 2));
    ra = checked_add(ra, checked_shl(checked_mul(x.d, y.d), 3));

    std::int64_t rb = checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a));
    rb = checked_add(rb, checked_shl(checked_add(bd, cd), 1));

    std::int64_t rc = checked_add(checked_mul(x.a, y.c), checked_mul(x.c, y.a));
    rc = checked_add(rc, checked_shl(checked_sub(bd, cd), 1));

    std::int64_t rd = checked_add(checked_mul(x.a, y.d), checked_mul(x.d, y.a));
    rd = checked_add(rd, checked_add(checked_mul(x.b, y.c), checked_mul(x.c, y.b)));
    rd = checked_add(rd, checked_sub(checked_mul(x.b, y.b), checked_mul(x.c, y.c)));

    return {ra, rb, rc, rd};
}

std::ostream& operator<<(std::ostream& os, const Z4Element& x);

/**
 * The four multiplier constants of the 8-point Arai DCT flow graph, encoded
 * exactly in the z4 basis. Each is 4x the cosine value it stands for:
 *
 *   C4      = 4*cos(4*pi/16) = z1*z2        -> (0, 0, 0, 1)
 *   C6      = 4*cos(6*pi/16) = z1 - z2      -> (0, 1, -1, 0)
 *   C2 - C6                  = 2*z2         -> (0, 0, 2, 0)
 *   C2 + C6                  = 2*z1         -> (0, 2, 0, 0)
 *
 * Every nonzero coordinate is a power of two, so multiplication by any of
 * them reduces to coordinate shifts, negations and adds.
 */
enum class AiConstant { c4, c6, c2_minus_c6, c2_plus_c6 };

Z4Element constant_value(AiConstant c);

// multiply(x, constant_value(c)) computed with shifts and adds only.
Z4Element mul_constant(const Z4Element& x, AiConstant c);

/**
 * Decode support: evaluates the basis radicals once at a requested binary
 * precision (>= 53 bits; lower is rejected) and caches the pairwise basis
 * products needed for doubly-encoded values.
 */
struct DecodeContext {
    explicit DecodeContext(unsigned prec_bits);

    unsigned precision;
    std::array<BigReal, 4> basis;                          // 1, z1, z2, z1*z2
    std::array<std::array<BigReal, 4>, 4> product;         // product[q][p] = basis(p)*basis(q)
};

// a + b*z1 + c*z2 + d*z1*z2 evaluated at the context precision.
BigReal decode(const Z4Element& x, const DecodeContext& ctx);
BigReal decode(const Z4Element& x, unsigned prec_bits);

}  // namespace aidct
