#include "aidct/z4.hpp"

#include <ostream>
#include <stdexcept>

namespace aidct {

std::ostream& operator<<(std::ostream& os, const Z4Element& x) {
    return os << "(" << x.a << ", " << x.b << ", " << x.c << ", " << x.d << ")";
}

Z4Element constant_value(AiConstant c) {
    switch (c) {
        case AiConstant::c4: return {0, 0, 0, 1};
        case AiConstant::c6: return {0, 1, -1, 0};
        case AiConstant::c2_minus_c6: return {0, 0, 2, 0};
        case AiConstant::c2_plus_c6: return {0, 2, 0, 0};
    }
    throw std::invalid_argument("aidct: unknown AI constant");
}

Z4Element mul_constant(const Z4Element& x, AiConstant c) {
    switch (c) {
        case AiConstant::c4:
            // x * z1z2 = (8d, 2(b+c), 2(b-c), a)
            return {checked_shl(x.d, 3),
                    checked_shl(checked_add(x.b, x.c), 1),
                    checked_shl(checked_sub(x.b, x.c), 1),
                    x.a};
        case AiConstant::c6:
            // x * (z1 - z2) = (4(b-c), a, 4d - a, 2c)
            return {checked_shl(checked_sub(x.b, x.c), 2),
                    x.a,
                    checked_sub(checked_shl(x.d, 2), x.a),
                    checked_shl(x.c, 1)};
        case AiConstant::c2_minus_c6:
            // x * 2*z2 = (8c, 4d, 2a - 4d, 2(b - c))
            return {checked_shl(x.c, 3),
                    checked_shl(x.d, 2),
                    checked_sub(checked_shl(x.a, 1), checked_shl(x.d, 2)),
                    checked_shl(checked_sub(x.b, x.c), 1)};
        case AiConstant::c2_plus_c6:
            // x * 2*z1 = (8b, 2a + 4d, 4d, 2(b + c))
            return {checked_shl(x.b, 3),
                    checked_add(checked_shl(x.a, 1), checked_shl(x.d, 2)),
                    checked_shl(x.d, 2),
                    checked_shl(checked_add(x.b, x.c), 1)};
    }
    throw std::invalid_argument("aidct: unknown AI constant");
}

DecodeContext::DecodeContext(unsigned prec_bits)
    : precision(prec_bits),
      basis{BigReal(prec_bits), BigReal(prec_bits), BigReal(prec_bits), BigReal(prec_bits)} {
    if (prec_bits < 53) {
        throw std::invalid_argument("aidct: decode precision below 53 bits");
    }
    const BigReal two = BigReal::from_int(2, prec_bits);
    const BigReal root2 = sqrt(two);
    const BigReal p = sqrt(two + root2);   // sqrt(2 + sqrt 2)
    const BigReal q = sqrt(two - root2);   // sqrt(2 - sqrt 2)
    basis[0] = BigReal::from_int(1, prec_bits);
    basis[1] = p + q;                      // z1
    basis[2] = p - q;                      // z2
    basis[3] = basis[1] * basis[2];        // z1*z2 = 2*sqrt(2)
    for (int qi = 0; qi < 4; ++qi) {
        for (int pi = 0; pi < 4; ++pi) {
            product[qi][pi] = basis[pi] * basis[qi];
        }
    }
}

BigReal decode(const Z4Element& x, const DecodeContext& ctx) {
    BigReal acc = BigReal::from_int(x.a, ctx.precision);
    acc.add_scaled(ctx.basis[1], x.b);
    acc.add_scaled(ctx.basis[2], x.c);
    acc.add_scaled(ctx.basis[3], x.d);
    return acc;
}

BigReal decode(const Z4Element& x, unsigned prec_bits) {
    return decode(x, DecodeContext(prec_bits));
}

}  // namespace aidct
