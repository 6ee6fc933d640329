#pragma once

// Fixed-width Gray code. Bit index 0 is the MOST significant position; every
// module in this library adopts that ordering, so encoded registers print
// left-to-right as q0 q1 ... q(n-1).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace graysim {

struct BitString {
    std::vector<int> bits;  // MSB first
    int width = 0;

    BitString() = default;
    BitString(std::vector<int> b, int w) : bits(std::move(b)), width(w) {
        if (width <= 0) throw std::domain_error("BitString: width must be positive");
        if (static_cast<int>(bits.size()) != width)
            throw std::domain_error("BitString: bit count must equal width");
        for (int bit : bits)
            if (bit != 0 && bit != 1) throw std::domain_error("BitString: bits must be 0 or 1");
    }

    std::string str() const {
        std::string s;
        s.reserve(bits.size());
        for (int b : bits) s.push_back(b ? '1' : '0');
        return s;
    }

    bool operator==(const BitString& o) const { return width == o.width && bits == o.bits; }
};

// G0 = B0, Gk = Bk xor B(k-1), applied to the width-bit binary form of m.
inline BitString to_gray(std::uint64_t m, int width) {
    if (width <= 0 || width > 62) throw std::domain_error("to_gray: width out of range");
    if (m >= (std::uint64_t{1} << width)) throw std::domain_error("to_gray: value does not fit width");
    std::vector<int> bits(width);
    int prev = 0;
    for (int k = 0; k < width; ++k) {
        const int bk = static_cast<int>((m >> (width - 1 - k)) & 1u);
        bits[k] = (k == 0) ? bk : (bk ^ prev);
        prev = bk;
    }
    return BitString(std::move(bits), width);
}

inline std::uint64_t from_gray(const BitString& g) {
    std::uint64_t value = 0;
    int bk = 0;
    for (int k = 0; k < g.width; ++k) {
        bk ^= g.bits[k];  // Bk = Gk xor B(k-1)
        value = (value << 1) | static_cast<unsigned>(bk);
    }
    return value;
}

// Integer convenience forms (same MSB-first convention packed into an int).
inline std::uint64_t gray_value(std::uint64_t m) { return m ^ (m >> 1); }

// The unique position where the Gray codes of n and n+1 differ.
inline int differing_position(std::uint64_t n, int width) {
    if (width <= 0 || width > 62) throw std::domain_error("differing_position: width out of range");
    if (n + 1 >= (std::uint64_t{1} << width))
        throw std::domain_error("differing_position: n+1 does not fit width");
    const BitString a = to_gray(n, width);
    const BitString b = to_gray(n + 1, width);
    int pos = -1;
    for (int k = 0; k < width; ++k) {
        if (a.bits[k] != b.bits[k]) {
            if (pos >= 0) throw std::logic_error("differing_position: Hamming distance > 1");
            pos = k;
        }
    }
    return pos;
}

}  // namespace graysim
