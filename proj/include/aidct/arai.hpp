#pragma once

#include <array>
#include <cstdint>

#include "aidct/z4.hpp"

namespace aidct {

using Z4Vector8 = std::array<Z4Element, 8>;
using PixelBlock = std::array<std::array<std::int32_t, 8>, 8>;   // [row][col]
using RealBlock = std::array<std::array<double, 8>, 8>;

/**
 * One 2-D DCT coefficient after both transform passes, kept unreduced:
 * coords[q][p] with q the channel produced by the column pass and p the
 * basis coordinate produced by the row pass. As a real number,
 *
 *   value = sum over q,p of coords[q][p] * basis(p) * basis(q),
 *
 * basis = (1, z1, z2, z1*z2).
 */
struct DoublyEncoded {
    std::array<std::array<std::int64_t, 4>, 4> coords{};

    bool operator==(const DoublyEncoded&) const = default;
};

using EncodedBlock = std::array<std::array<DoublyEncoded, 8>, 8>;  // [i][k]

// Per-index diagonal gain of the 1-D pass relative to the orthonormal
// DCT-II; the 2-D coefficient (i,k) carries s[i]*s[k].
struct ScaleVector {
    std::array<double, 8> s{};
};

/**
 * 8-point Arai DCT lifted to the z4 ring: the scaled-output factorization
 * with five constant multiplications, each replaced by mul_constant, and
 * every branch that feeds a multiplied value pre-shifted by 2 so each output
 * stays a fixed integer multiple of its real-valued counterpart. Only
 * add/sub/shift/mul_constant are used, so the pass is exact.
 */
Z4Vector8 arai_dct_1d(const Z4Vector8& in);
Z4Vector8 arai_dct_1d(const std::array<std::int64_t, 8>& in);

// Integer channel q of a vector of ring elements.
std::array<std::int64_t, 8> channel_of(const Z4Vector8& v, int q);

/**
 * Full 2-D transform: column pass over encoded integer columns, transpose,
 * then one row pass per channel q on the integer plane of that channel
 * (mirroring four parallel row cores). No reconstruction happens anywhere
 * inside; the result is exact. Output [i][k]: i indexes the column-pass
 * frequency (vertical), k the row-pass frequency (horizontal).
 */
EncodedBlock arai_dct_2d(const PixelBlock& block);

// Column-pass output only: out[i][c] = arai_dct_1d(column c of block)[i].
std::array<std::array<Z4Element, 8>, 8> arai_column_pass(const PixelBlock& block);

// Row pass of one transposed column (the 8 entries of row u of the
// column-pass output), split into its four channel cores.
std::array<Z4Vector8, 4> arai_row_pass(const Z4Vector8& transposed_column);

// Sum over q,p of coords[q][p] * basis(p) * basis(q), no approximation.
BigReal decode_exact(const DoublyEncoded& x, const DecodeContext& ctx);
BigReal decode_exact(const DoublyEncoded& x, unsigned prec_bits);

/**
 * Solves for the diagonal scale of arai_dct_1d against the orthonormal
 * DCT-II by transforming the eight unit impulses and decoding at high
 * precision. Throws std::logic_error if the relation is not diagonal to
 * within 1e-9 (a flow-graph bug).
 */
ScaleVector derive_scale_vector();

}  // namespace aidct
