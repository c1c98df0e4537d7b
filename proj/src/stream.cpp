#include "aidct/stream.hpp"

#include <deque>
#include <stdexcept>

namespace aidct {

std::optional<std::array<Z4Vector8, 8>> TransposeBuffer::push(const Z4Vector8& column) {
    // shift the chain and insert at the head; taps read across the chain
    for (int j = 7; j > 0; --j) fifo_[j] = fifo_[j - 1];
    fifo_[0] = column;
    if (++fill_ < 8) return std::nullopt;
    fill_ = 0;

    std::array<Z4Vector8, 8> out;
    for (int u = 0; u < 8; ++u) {
        for (int c = 0; c < 8; ++c) {
            out[u][c] = fifo_[7 - c][u];   // fifo_[7] holds the oldest column
        }
    }
    return out;
}

double TimingReport::frame_rate_hz(int width, int height) const {
    if (width <= 0 || height <= 0 || width % 8 != 0 || height % 8 != 0) {
        throw std::invalid_argument("aidct: frame dimensions must be positive multiples of 8");
    }
    const double blocks_per_frame = (static_cast<double>(width) / 8.0) * (static_cast<double>(height) / 8.0);
    return block_rate_hz() / blocks_per_frame;
}

namespace {

struct RowStage {
    std::array<Z4Vector8, 8> columns;   // transposed block being consumed
    int next = 0;
    std::size_t block_index = 0;
    EncodedBlock out{};
};

}  // namespace

StreamResult run_stream(std::span<const std::int32_t> pixels, const StreamConfig& cfg) {
    if (pixels.size() % 64 != 0) {
        throw std::invalid_argument("aidct: pixel stream length must be a multiple of 64");
    }
    const std::size_t n_blocks = pixels.size() / 64;

    StreamResult result;
    result.blocks.reserve(n_blocks);
    result.timing.clock_hz = cfg.clock_hz;
    result.timing.wordlength = cfg.wordlength;
    result.timing.frs_id = cfg.decoder.id();
    result.timing.blocks = n_blocks;

    std::optional<DecodeContext> exact_ctx;
    if (cfg.decoder.exact) exact_ctx.emplace(cfg.decoder.exact_precision);

    // stage state
    PixelBlock load_buf{};
    std::deque<std::pair<std::size_t, PixelBlock>> column_queue;  // loaded, awaiting column pass
    int column_next = 0;
    TransposeBuffer tb;
    std::deque<std::pair<std::size_t, std::array<Z4Vector8, 8>>> row_queue;
    std::optional<RowStage> row;
    std::uint64_t first_latency = 0;
    bool latency_recorded = false;

    std::uint64_t tick = 0;
    std::size_t emitted = 0;
    while (emitted < n_blocks) {
        // row cores: one transposed column per tick, four channels in parallel
        if (!row && !row_queue.empty()) {
            row.emplace();
            row->block_index = row_queue.front().first;
            row->columns = row_queue.front().second;
            row_queue.pop_front();
        }
        if (row) {
            const int u = row->next;
            const auto channels = arai_row_pass(row->columns[u]);
            for (int q = 0; q < 4; ++q) {
                for (int k = 0; k < 8; ++k) {
                    for (int p = 0; p < 4; ++p) {
                        row->out[u][k].coords[q][p] = channels[q][k].coord(p);
                    }
                }
            }
            if (++row->next == 8) {
                StreamBlock sb;
                sb.index = row->block_index;
                for (int i = 0; i < 8; ++i) {
                    for (int k = 0; k < 8; ++k) {
                        sb.values[i][k] = cfg.decoder.apply(row->out[i][k],
                                                            exact_ctx ? &*exact_ctx : nullptr);
                    }
                }
                if (!latency_recorded) {
                    first_latency = tick + 1 - 8 * sb.index;   // output end of this tick
                    latency_recorded = true;
                }
                result.blocks.push_back(std::move(sb));
                ++emitted;
                row.reset();
            }
        }

        // column core: one column per tick into the transpose buffer
        if (!column_queue.empty()) {
            auto& [bidx, blk] = column_queue.front();
            std::array<std::int64_t, 8> column;
            for (int r = 0; r < 8; ++r) column[r] = blk[r][column_next];
            auto transposed = tb.push(arai_dct_1d(column));
            if (transposed) {
                row_queue.emplace_back(bidx, *transposed);
            }
            if (++column_next == 8) {
                column_next = 0;
                column_queue.pop_front();
            }
        }

        // decimator intake: eight parallel streams deliver one block row per tick
        const std::uint64_t in_ticks = 8 * n_blocks;
        if (tick < in_ticks) {
            const std::size_t b = tick / 8;
            const int r = static_cast<int>(tick % 8);
            for (int i = 0; i < 8; ++i) {
                load_buf[r][i] = pixels[64 * b + 8 * static_cast<std::size_t>(r) + static_cast<std::size_t>(i)];
            }
            if (r == 7) {
                column_queue.emplace_back(b, load_buf);
            }
        }

        ++tick;
    }

    result.timing.ticks_total = tick;
    result.timing.latency_ticks = first_latency;
    return result;
}

}  // namespace aidct
