#ifndef LDPC_RNG_HPP
#define LDPC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace ldpc {

// Deterministic random stream. One stream per owner; never shared across
// threads. Streams for parallel work units are derived from (master, index)
// so results do not depend on scheduling.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    static RandomStream derive(std::uint64_t master, std::uint64_t index) {
        std::uint64_t s = splitmix64(master ^ splitmix64(index + 1));
        return RandomStream(splitmix64(s));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Unbiased integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = gen_();
            if (r >= threshold) return r % bound;
        }
    }

    // 53-bit uniform in [0, 1).
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (self-contained; std::normal_distribution
    // is implementation-defined and would tie outputs to the stdlib version).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ldpc

#endif
