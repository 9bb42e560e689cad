#include "courtcast/rng.hpp"

#include <cmath>

namespace courtcast {

double Rng::normal(double mean, double stddev) {
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return mean + stddev * u * std::sqrt(-2.0 * std::log(s) / s);
}

std::uint64_t substream_seed(std::uint64_t root, std::string_view stream,
                             std::uint64_t a, std::uint64_t b) {
    // FNV-1a over the stream name, then splitmix64-style mixing of the
    // numeric lanes. Distinct names and indices land in distinct streams.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : stream) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    h = mix(h ^ mix(root + 0x9e3779b97f4a7c15ULL));
    h = mix(h ^ mix(a + 0x9e3779b97f4a7c15ULL));
    h = mix(h ^ mix(b + 0x9e3779b97f4a7c15ULL));
    return h;
}

}  // namespace courtcast
