#pragma once

#include <bit>
#include <cstdint>

namespace pmk {

// Fixed 128-bit vertex set. Bit i = vertex i.
struct Bits128 {
    uint64_t w[2]{0, 0};

    static Bits128 range(int n) {
        Bits128 b;
        if (n >= 64) {
            b.w[0] = ~0ull;
            b.w[1] = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
        } else if (n > 0) {
            b.w[0] = (1ull << n) - 1;
        }
        return b;
    }
    static Bits128 single(int i) {
        Bits128 b;
        b.set(i);
        return b;
    }

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
    bool any() const { return w[0] | w[1]; }
    bool none() const { return !any(); }

    // Lowest set bit, or -1 when empty.
    int first() const {
        if (w[0]) return std::countr_zero(w[0]);
        if (w[1]) return 64 + std::countr_zero(w[1]);
        return -1;
    }
    // Lowest set bit above i, or -1.
    int next(int i) const {
        ++i;
        if (i >= 128) return -1;
        if (i < 64) {
            uint64_t m = w[0] & ~((1ull << i) - 1);
            if (m) return std::countr_zero(m);
            if (w[1]) return 64 + std::countr_zero(w[1]);
            return -1;
        }
        uint64_t m = w[1] & (i == 64 ? ~0ull : ~((1ull << (i - 64)) - 1));
        if (m) return 64 + std::countr_zero(m);
        return -1;
    }

    bool subset_of(const Bits128& o) const { return !((w[0] & ~o.w[0]) | (w[1] & ~o.w[1])); }
    bool intersects(const Bits128& o) const { return (w[0] & o.w[0]) | (w[1] & o.w[1]); }

    friend Bits128 operator&(Bits128 a, const Bits128& b) {
        a.w[0] &= b.w[0];
        a.w[1] &= b.w[1];
        return a;
    }
    friend Bits128 operator|(Bits128 a, const Bits128& b) {
        a.w[0] |= b.w[0];
        a.w[1] |= b.w[1];
        return a;
    }
    friend Bits128 operator^(Bits128 a, const Bits128& b) {
        a.w[0] ^= b.w[0];
        a.w[1] ^= b.w[1];
        return a;
    }
    // Set difference a & ~b.
    friend Bits128 operator-(Bits128 a, const Bits128& b) {
        a.w[0] &= ~b.w[0];
        a.w[1] &= ~b.w[1];
        return a;
    }
    Bits128& operator&=(const Bits128& b) { return *this = *this & b; }
    Bits128& operator|=(const Bits128& b) { return *this = *this | b; }
    Bits128& operator-=(const Bits128& b) { return *this = *this - b; }

    // Forward iteration over set bits, lowest first.
    struct iterator {
        const Bits128* s;
        int v;
        int operator*() const { return v; }
        iterator& operator++() {
            v = s->next(v);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

    friend bool operator==(const Bits128& a, const Bits128& b) {
        return a.w[0] == b.w[0] && a.w[1] == b.w[1];
    }
    friend bool operator!=(const Bits128& a, const Bits128& b) { return !(a == b); }
    // Numeric order, for deterministic tie-breaking.
    friend bool operator<(const Bits128& a, const Bits128& b) {
        if (a.w[1] != b.w[1]) return a.w[1] < b.w[1];
        return a.w[0] < b.w[0];
    }
};

}  // namespace pmk
