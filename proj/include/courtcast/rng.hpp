#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace courtcast {

// xoshiro256++ seeded through splitmix64. All randomness in the library goes
// through this engine so runs are reproducible from one root seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            // splitmix64 step
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform index in [0, n). Modulo bias is irrelevant at our scales.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    bool bernoulli(double p) { return uniform() < p; }

    // Polar Box-Muller, spare discarded so draws stay one-to-one with calls.
    double normal(double mean = 0.0, double stddev = 1.0);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

// Derives the seed of a named substream from the root seed. Streams used by
// the pipeline: "generator", "split", "init", "dropout", "downsample",
// "shuffle", "valwin", "sample".
std::uint64_t substream_seed(std::uint64_t root, std::string_view stream,
                             std::uint64_t a = 0, std::uint64_t b = 0);

}  // namespace courtcast
