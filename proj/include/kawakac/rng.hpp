#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace kawakac {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// Splittable: stream k occupies counter block (., ., ., k), so replicas
// draw from disjoint 2^96 counter ranges regardless of scheduling.
class Philox {
public:
    Philox() : Philox(0, 0) {}
    Philox(std::uint64_t seed, std::uint32_t stream)
        : key_{std::uint32_t(seed & 0xffffffffu), std::uint32_t(seed >> 32)},
          ctr_{0, 0, 0, stream} {}

    using result_type = std::uint32_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return 0xffffffffu; }

    result_type operator()() {
        if (pos_ == 4) {
            block_ = next_block();
            pos_ = 0;
        }
        return block_[pos_++];
    }

    // uniform double in [0,1) with 53 random bits
    double uniform() {
        const std::uint64_t hi = (*this)();
        const std::uint64_t lo = (*this)();
        return double(((hi << 32) | lo) >> 11) * 0x1.0p-53;
    }

    // uniform in [0,1): never returns 0 (safe for log)
    double uniform_pos() {
        double u = uniform();
        while (u <= 0.0) u = uniform();
        return u;
    }

    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    bool bernoulli(double p) { return uniform() < p; }

    // integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        return std::uint64_t(uniform() * double(n)) % n;
    }

    double normal() {
        const double u1 = uniform_pos(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    static std::array<std::uint32_t, 4> bijection(std::array<std::uint32_t, 4> c,
                                                  std::array<std::uint32_t, 2> k) {
        for (int r = 0; r < 10; ++r) {
            const std::uint64_t p0 = std::uint64_t(0xD2511F53u) * c[0];
            const std::uint64_t p1 = std::uint64_t(0xCD9E8D57u) * c[2];
            c = {std::uint32_t(p1 >> 32) ^ c[1] ^ k[0], std::uint32_t(p1),
                 std::uint32_t(p0 >> 32) ^ c[3] ^ k[1], std::uint32_t(p0)};
            k[0] += 0x9E3779B9u;
            k[1] += 0xBB67AE85u;
        }
        return c;
    }

private:
    std::array<std::uint32_t, 4> next_block() {
        const auto out = bijection(ctr_, key_);
        if (++ctr_[0] == 0 && ++ctr_[1] == 0) ++ctr_[2];  // stream word untouched
        return out;
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> ctr_;
    std::array<std::uint32_t, 4> block_{};
    int pos_ = 4;
};

}  // namespace kawakac
