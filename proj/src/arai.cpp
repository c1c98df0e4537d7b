#include "aidct/arai.hpp"

#include <cmath>
#include <stdexcept>

namespace aidct {

Z4Vector8 arai_dct_1d(const Z4Vector8& x) {
    const Z4Element t0 = x[0] + x[7];
    const Z4Element t7 = x[0] - x[7];
    const Z4Element t1 = x[1] + x[6];
    const Z4Element t6 = x[1] - x[6];
    const Z4Element t2 = x[2] + x[5];
    const Z4Element t5 = x[2] - x[5];
    const Z4Element t3 = x[3] + x[4];
    const Z4Element t4 = x[3] - x[4];

    // even part
    const Z4Element u0 = t0 + t3;
    const Z4Element u3 = t0 - t3;
    const Z4Element u1 = t1 + t2;
    const Z4Element u2 = t1 - t2;

    const Z4Element v = mul_constant(u2 + u3, AiConstant::c4);
    const Z4Element u3s = u3.shifted_left(2);

    // odd part
    const Z4Element w0 = t4 + t5;
    const Z4Element w1 = t5 + t6;
    const Z4Element w2 = t6 + t7;

    const Z4Element z5 = mul_constant(w0 - w2, AiConstant::c6);
    const Z4Element za = mul_constant(w0, AiConstant::c2_minus_c6) + z5;
    const Z4Element zb = mul_constant(w2, AiConstant::c2_plus_c6) + z5;
    const Z4Element zc = mul_constant(w1, AiConstant::c4);
    const Z4Element t7s = t7.shifted_left(2);
    const Z4Element z11 = t7s + zc;
    const Z4Element z13 = t7s - zc;

    return {u0 + u1,        // X0
            z11 + zb,       // X1
            u3s + v,        // X2
            z13 - za,       // X3
            u0 - u1,        // X4
            z13 + za,       // X5
            u3s - v,        // X6
            z11 - zb};      // X7
}

Z4Vector8 arai_dct_1d(const std::array<std::int64_t, 8>& in) {
    Z4Vector8 enc;
    for (int j = 0; j < 8; ++j) enc[j] = Z4Element::from_int(in[j]);
    return arai_dct_1d(enc);
}

std::array<std::int64_t, 8> channel_of(const Z4Vector8& v, int q) {
    std::array<std::int64_t, 8> out;
    for (int j = 0; j < 8; ++j) out[j] = v[j].coord(q);
    return out;
}

std::array<std::array<Z4Element, 8>, 8> arai_column_pass(const PixelBlock& block) {
    std::array<std::array<Z4Element, 8>, 8> m;  // m[i][c]
    for (int c = 0; c < 8; ++c) {
        std::array<std::int64_t, 8> column;
        for (int r = 0; r < 8; ++r) column[r] = block[r][c];
        const Z4Vector8 out = arai_dct_1d(column);
        for (int i = 0; i < 8; ++i) m[i][c] = out[i];
    }
    return m;
}

std::array<Z4Vector8, 4> arai_row_pass(const Z4Vector8& transposed_column) {
    std::array<Z4Vector8, 4> out;
    for (int q = 0; q < 4; ++q) {
        out[q] = arai_dct_1d(channel_of(transposed_column, q));
    }
    return out;
}

EncodedBlock arai_dct_2d(const PixelBlock& block) {
    const auto m = arai_column_pass(block);
    EncodedBlock result{};
    for (int i = 0; i < 8; ++i) {
        // m[i] is row i of the column-pass output = one transposed column.
        const auto rows = arai_row_pass(m[i]);
        for (int q = 0; q < 4; ++q) {
            for (int k = 0; k < 8; ++k) {
                for (int p = 0; p < 4; ++p) {
                    result[i][k].coords[q][p] = rows[q][k].coord(p);
                }
            }
        }
    }
    return result;
}

BigReal decode_exact(const DoublyEncoded& x, const DecodeContext& ctx) {
    BigReal acc(ctx.precision);
    for (int q = 0; q < 4; ++q) {
        for (int p = 0; p < 4; ++p) {
            if (x.coords[q][p] != 0) acc.add_scaled(ctx.product[q][p], x.coords[q][p]);
        }
    }
    return acc;
}

BigReal decode_exact(const DoublyEncoded& x, unsigned prec_bits) {
    return decode_exact(x, DecodeContext(prec_bits));
}

ScaleVector derive_scale_vector() {
    constexpr unsigned kPrec = 160;
    const DecodeContext ctx(kPrec);

    // decoded response of output k to impulse e_j
    std::array<std::array<double, 8>, 8> response;
    for (int j = 0; j < 8; ++j) {
        std::array<std::int64_t, 8> e{};
        e[j] = 1;
        const Z4Vector8 out = arai_dct_1d(e);
        for (int k = 0; k < 8; ++k) response[k][j] = decode(out[k], ctx).to_double();
    }

    // orthonormal DCT-II matrix
    std::array<std::array<double, 8>, 8> dct;
    for (int k = 0; k < 8; ++k) {
        const double gain = (k == 0) ? std::sqrt(1.0 / 8.0) : 0.5;
        for (int j = 0; j < 8; ++j) {
            dct[k][j] = gain * std::cos((2 * j + 1) * k * M_PI / 16.0);
        }
    }

    ScaleVector sv;
    for (int k = 0; k < 8; ++k) {
        sv.s[k] = response[k][0] / dct[k][0];
        if (!(sv.s[k] > 0.0)) {
            throw std::logic_error("aidct: non-positive 1-D pass gain");
        }
    }
    // The relation must be exactly diagonal: each output row is the
    // corresponding DCT row times s[k].
    for (int k = 0; k < 8; ++k) {
        for (int j = 0; j < 8; ++j) {
            if (std::abs(response[k][j] - sv.s[k] * dct[k][j]) > 1e-9) {
                throw std::logic_error("aidct: 1-D pass is not a diagonal rescale of the DCT");
            }
        }
    }
    return sv;
}

}  // namespace aidct
