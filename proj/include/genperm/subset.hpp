#pragma once

// Subsets of the ground set [d] = {1, ..., d} encoded as d-bit masks:
// bit i-1 is set iff element i is in the subset. The hard cap d <= 20
// keeps dense 2^d tables affordable.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace genperm {

inline constexpr int kMaxGroundSize = 20;

inline void check_ground_size(int d) {
    if (d < 1 || d > kMaxGroundSize) {
        throw std::invalid_argument("ground-set size must be between 1 and " +
                                    std::to_string(kMaxGroundSize) + ", got " + std::to_string(d));
    }
}

class Subset {
public:
    Subset(std::uint32_t bits, int d) : bits_(bits), d_(d) {
        check_ground_size(d);
        if (d < 32 && (bits >> d) != 0) {
            throw std::invalid_argument("subset mask has bits outside the ground set");
        }
    }

    static Subset empty_set(int d) { return Subset(0, d); }

    static Subset full_set(int d) {
        check_ground_size(d);
        return Subset((std::uint32_t{1} << d) - 1, d);
    }

    static Subset singleton(int element, int d) {
        return Subset::empty_set(d).with(element);
    }

    static Subset of(const std::vector<int>& elements, int d) {
        Subset s = Subset::empty_set(d);
        for (int e : elements) s = s.with(e);
        return s;
    }

    std::uint32_t bits() const { return bits_; }
    int ground_size() const { return d_; }
    int cardinality() const { return std::popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }

    bool contains(int element) const {
        check_element(element);
        return (bits_ >> (element - 1)) & 1u;
    }

    bool subset_of(const Subset& other) const {
        check_same_ground(other);
        return (bits_ & ~other.bits_) == 0;
    }

    Subset with(int element) const {
        check_element(element);
        return Subset(bits_ | (std::uint32_t{1} << (element - 1)), d_);
    }

    Subset without(int element) const {
        check_element(element);
        return Subset(bits_ & ~(std::uint32_t{1} << (element - 1)), d_);
    }

    Subset complement() const { return Subset(~bits_ & Subset::full_set(d_).bits(), d_); }

    Subset minus(const Subset& other) const {
        check_same_ground(other);
        return Subset(bits_ & ~other.bits_, d_);
    }

    friend Subset operator|(const Subset& a, const Subset& b) {
        a.check_same_ground(b);
        return Subset(a.bits_ | b.bits_, a.d_);
    }

    friend Subset operator&(const Subset& a, const Subset& b) {
        a.check_same_ground(b);
        return Subset(a.bits_ & b.bits_, a.d_);
    }

    // Elements in increasing order, 1-based.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(cardinality());
        for (std::uint32_t m = bits_; m != 0; m &= m - 1) {
            out.push_back(std::countr_zero(m) + 1);
        }
        return out;
    }

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    void check_element(int element) const {
        if (element < 1 || element > d_) {
            throw std::invalid_argument("element " + std::to_string(element) +
                                        " outside ground set [" + std::to_string(d_) + "]");
        }
    }
    void check_same_ground(const Subset& other) const {
        if (d_ != other.d_) {
            throw std::invalid_argument("subsets live on different ground sets");
        }
    }

    std::uint32_t bits_;
    int d_;
};

// Element-list order: {1,3} precedes {1,3,4} precedes {2}.
inline bool lex_precedes(const Subset& a, const Subset& b) {
    std::uint32_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        const int ex = std::countr_zero(x), ey = std::countr_zero(y);
        if (ex != ey) return ex < ey;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

inline std::string to_string(const Subset& s) {
    std::string out = "{";
    bool first = true;
    for (int e : s.elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

// Ascending enumeration of all submasks of `mask` (including 0 and mask itself).
template <typename Fn>
void for_each_submask(std::uint32_t mask, Fn&& fn) {
    std::uint32_t s = 0;
    while (true) {
        fn(s);
        if (s == mask) break;
        s = (s - mask) & mask;
    }
}

}  // namespace genperm
