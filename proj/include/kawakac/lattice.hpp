#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kawakac {

// Occupancies on the lattice {-N,...,N}, one particle per site at most.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(int half_width)
        : n_(half_width), occ_(std::size_t(2 * half_width + 1), 0) {
        if (half_width < 1) throw std::invalid_argument("Configuration: N must be >= 1");
    }

    int half_width() const { return n_; }
    int size() const { return 2 * n_ + 1; }
    bool in_range(int site) const { return site >= -n_ && site <= n_; }

    int at(int site) const { return occ_[std::size_t(site + n_)]; }
    void set(int site, int value) {
        if (value != 0 && value != 1)
            throw std::invalid_argument("Configuration: occupancy must be 0 or 1");
        occ_[std::size_t(site + n_)] = std::uint8_t(value);
    }

    void exchange(int x, int y) {
        std::swap(occ_[std::size_t(x + n_)], occ_[std::size_t(y + n_)]);
    }
    void flip(int site) { occ_[std::size_t(site + n_)] ^= 1; }

    int total_particles() const {
        int s = 0;
        for (auto o : occ_) s += o;
        return s;
    }

    const std::vector<std::uint8_t>& raw() const { return occ_; }

    bool operator==(const Configuration& other) const {
        return n_ == other.n_ && occ_ == other.occ_;
    }

private:
    int n_ = 0;
    std::vector<std::uint8_t> occ_;
};

}  // namespace kawakac
