#pragma once

#include <cstdint>
#include <string_view>

namespace regft {

// splitmix64: tiny, well-mixed, and identical on every platform. All
// randomness in the project flows through this so that runs are
// reproducible bit-for-bit regardless of standard-library version.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * next_double();
    }

    // Uniform integer in [0, n), n >= 1. Lemire-style multiply-shift.
    int next_int(int n) noexcept {
        const auto r = static_cast<unsigned __int128>(next_u64()) *
                       static_cast<unsigned __int128>(static_cast<std::uint64_t>(n));
        return static_cast<int>(static_cast<std::uint64_t>(r >> 64));
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix_u64(std::uint64_t x) noexcept {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Stream derivation: hash(run_seed, tag, index). Independent of worker
// count and scheduling order, so parallel samplers stay reproducible.
inline std::uint64_t derive_seed(std::uint64_t run_seed, std::string_view tag,
                                 std::uint64_t index) noexcept {
    std::uint64_t h = mix_u64(run_seed ^ 0x6a09e667f3bcc908ULL);
    h = mix_u64(h ^ fnv1a(tag));
    h = mix_u64(h ^ index);
    return h;
}

}  // namespace regft
