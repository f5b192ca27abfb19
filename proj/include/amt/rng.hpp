#pragma once

#include <cstdint>
#include <vector>

namespace amt {

// 64-bit LCG (Knuth's MMIX constants), fixed so that seeded runs are
// bit-identical across platforms. Used for matching search and random
// complex generation; not a general-purpose RNG.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        return state_;
    }

    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    // Uniform in [0, 1) with 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        // Fisher-Yates, high index down.
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[next_below(i)]);
    }

private:
    std::uint64_t state_;
};

}  // namespace amt
