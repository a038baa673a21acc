#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace erw {

// Counter-based pseudo-random stream (Philox4x64-10).
//
// A stream is addressed by (seed, stream index): the pair forms the cipher
// key and the draw position forms the counter, so the k-th draw of a stream
// is a pure function of (seed, stream, k). Consequences we rely on
// throughout the project:
//   - identical (seed, stream) replays the identical sequence, independent
//     of platform, thread schedule or how the draws are interleaved with
//     other streams;
//   - distinct stream indices give statistically independent sequences, so
//     replications can be sharded across workers without a shared generator;
//   - seek() provides O(1) random access, which makes "extend a walk from
//     draw n onward" an exact continuation of "simulate from scratch".
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) noexcept;

    // Next raw 64-bit word.
    std::uint64_t next_u64() noexcept;

    // Uniform draw on the open interval (0,1): 53-bit resolution, offset by
    // half an ulp so 0 and 1 are never returned (safe under log/quantile
    // transforms).
    double next_uniform() noexcept;

    // Standard normal via inverse-CDF transform of next_uniform(); exactly
    // one draw is consumed per variate.
    double next_normal() noexcept;

    // Absolute draw index of the next value.
    std::uint64_t position() const noexcept { return index_; }

    // Jump (forward or backward) to an absolute draw index.
    void seek(std::uint64_t draw_index) noexcept;

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    // Independent child stream of this one; substreams with distinct keys
    // never collide with each other or with the parent.
    RngStream substream(std::uint64_t key) const noexcept;

private:
    void refill(std::uint64_t block) noexcept;

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t index_ = 0;
    std::uint64_t buffered_block_;
    std::array<std::uint64_t, 4> buffer_{};
};

// Stream index for replication r of the experiment identified by tag:
// FNV-1a over the tag bytes followed by the little-endian replication
// index. Keeps every (experiment, replication) pair on its own stream.
std::uint64_t stream_of(std::string_view tag, std::uint64_t replication) noexcept;

// SplitMix64 finalizer; used for stream derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

} // namespace erw
