#pragma once

#include <cstdint>

namespace txsite {

// splitmix64 stream (Steele, Lea, Flood 2014). Small enough to seed one
// stream per grid post, which keeps sampling independent of thread schedule.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Modulo bias is ~n/2^64, irrelevant for grid spans.
    uint64_t next_below(uint64_t n) { return next() % n; }

    // Uniform in [0, 1).
    double next_double() { return (next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

// Mixes several words into one stream seed.
inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c = 0) {
    SplitMix64 s(a);
    uint64_t h = s.next() ^ (b * 0xFF51AFD7ED558CCDull);
    SplitMix64 t(h);
    return t.next() ^ (c * 0xC4CEB9FE1A85EC53ull);
}

}  // namespace txsite
