#ifndef MAGT_RNG_HPP
#define MAGT_RNG_HPP

#include <cstdint>
#include <vector>

namespace magt {

// Deterministic PRNG (splitmix64 seeding + xoshiro256**). We avoid
// <random> distributions because their output is not specified across
// standard library implementations; run reproducibility requires
// bit-identical streams everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& w : state_) {
            x += 0x9E3779B97F4A7C15ull;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            w = z ^ (z >> 31);
        }
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, n). n must be > 0.
    uint64_t bounded(uint64_t n) {
        // rejection sampling to avoid modulo bias
        const uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(bounded(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(uint64_t num, uint64_t den) { return bounded(den) < num; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<size_t>(bounded(v.size()))];
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Independent child stream, stable under the parent's future use.
    Rng split(uint64_t salt) const {
        return Rng(state_[0] ^ (salt * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull));
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t state_[4] = {};
};

}  // namespace magt

#endif  // MAGT_RNG_HPP
