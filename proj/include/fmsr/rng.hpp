#ifndef FMSR_RNG_HPP
#define FMSR_RNG_HPP

#include <cstdint>

namespace fmsr {

// splitmix64: seedable, splittable, identical output on every platform.
// Statistical quality is ample for coefficient sampling and failure injection.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0.
    std::uint32_t below(std::uint32_t n) {
        return static_cast<std::uint32_t>(next() % n);
    }

    std::uint8_t byte() { return static_cast<std::uint8_t>(next() & 0xFF); }

    // Uniform over the 255 nonzero field elements.
    std::uint8_t nonzero_byte() { return static_cast<std::uint8_t>(1 + below(255)); }

    // Independent child stream derived from this stream's seed and a tag.
    Rng fork(std::uint64_t tag) const {
        Rng mixer(state_ ^ (0xA0761D6478BD642FULL * (tag + 1)));
        return Rng(mixer.next());
    }

private:
    std::uint64_t state_;
};

} // namespace fmsr

#endif
