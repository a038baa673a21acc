#include "erw/rng.hpp"

#include "erw/stat_dist.hpp"

namespace erw {
namespace {

// Philox4x64-10 round constants (Salmon et al., "Parallel random numbers:
// as easy as 1, 2, 3").
constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

inline void mul_hi_lo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) noexcept {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(prod >> 64);
    lo = static_cast<std::uint64_t>(prod);
}

std::array<std::uint64_t, 4> philox4x64_10(std::array<std::uint64_t, 4> ctr,
                                           std::uint64_t k0, std::uint64_t k1) noexcept {
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi0, lo0, hi1, lo1;
        mul_hi_lo(kPhiloxM0, ctr[0], hi0, lo0);
        mul_hi_lo(kPhiloxM1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return ctr;
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) noexcept
    : seed_(seed), stream_(stream) {
    refill(0);
}

void RngStream::refill(std::uint64_t block) noexcept {
    buffer_ = philox4x64_10({block, 0, 0, 0}, seed_, stream_);
    buffered_block_ = block;
}

std::uint64_t RngStream::next_u64() noexcept {
    const std::uint64_t block = index_ >> 2;
    if (block != buffered_block_) refill(block);
    return buffer_[index_++ & 3];
}

double RngStream::next_uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::next_normal() noexcept {
    return normal_quantile(next_uniform());
}

void RngStream::seek(std::uint64_t draw_index) noexcept {
    index_ = draw_index;
    const std::uint64_t block = index_ >> 2;
    if (block != buffered_block_) refill(block);
}

RngStream RngStream::substream(std::uint64_t key) const noexcept {
    return RngStream(seed_, mix64(stream_ + mix64(key + 0x9E3779B97F4A7C15ull)));
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

std::uint64_t stream_of(std::string_view tag, std::uint64_t replication) noexcept {
    std::uint64_t h = 14695981039346656037ull;
    const auto eat = [&h](unsigned char byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    for (char c : tag) eat(static_cast<unsigned char>(c));
    for (int i = 0; i < 8; ++i) eat(static_cast<unsigned char>(replication >> (8 * i)));
    return h;
}

} // namespace erw
