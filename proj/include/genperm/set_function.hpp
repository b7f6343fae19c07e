#pragma once

// Dense exact-rational set functions on the boolean lattice 2^[d], the
// zeta / Moebius transform pair connecting the y- and z-coordinates of
// signed simplex sums, and harmonic numbers.

#include "genperm/rational.hpp"
#include "genperm/subset.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace genperm {

class SetFunction {
public:
    explicit SetFunction(int d) : d_((check_ground_size(d), d)), values_(std::size_t{1} << d) {}

    int ground_size() const { return d_; }
    std::size_t table_size() const { return values_.size(); }

    const Rational& operator[](const Subset& I) const {
        check_ground(I);
        return values_[I.bits()];
    }

    const Rational& at_mask(std::uint32_t mask) const { return values_[mask]; }

    void set(const Subset& I, Rational v) {
        check_ground(I);
        values_[I.bits()] = std::move(v);
    }

    void set_mask(std::uint32_t mask, Rational v) {
        if (mask >= values_.size()) throw std::invalid_argument("mask outside table");
        values_[mask] = std::move(v);
    }

    bool zero_at_empty() const { return values_[0] == 0; }

    bool integer_valued() const {
        for (const Rational& v : values_) {
            if (!is_integer(v)) return false;
        }
        return true;
    }

    SetFunction& operator+=(const SetFunction& other) {
        check_same(other);
        for (std::size_t m = 0; m < values_.size(); ++m) values_[m] += other.values_[m];
        return *this;
    }

    friend SetFunction operator+(SetFunction a, const SetFunction& b) { return a += b; }

    SetFunction scaled(const Rational& factor) const {
        SetFunction out(d_);
        for (std::size_t m = 0; m < values_.size(); ++m) out.values_[m] = values_[m] * factor;
        return out;
    }

    friend bool operator==(const SetFunction&, const SetFunction&) = default;

    friend SetFunction zeta_transform(const SetFunction& y);
    friend SetFunction mobius_transform(const SetFunction& z);

private:
    void check_ground(const Subset& I) const {
        if (I.ground_size() != d_) throw std::invalid_argument("subset from a different ground set");
    }
    void check_same(const SetFunction& other) const {
        if (other.d_ != d_) throw std::invalid_argument("set functions on different ground sets");
    }

    int d_;
    std::vector<Rational> values_;
};

// z_I = sum of y_J over J contained in I. Subset-sum (Yates) recursion, O(d 2^d).
inline SetFunction zeta_transform(const SetFunction& y) {
    if (!y.zero_at_empty()) {
        throw std::invalid_argument("zeta_transform: value at the empty set must be 0");
    }
    SetFunction z = y;
    const std::size_t n = z.values_.size();
    for (int bit = 0; bit < z.d_; ++bit) {
        const std::size_t step = std::size_t{1} << bit;
        for (std::size_t mask = 0; mask < n; ++mask) {
            if (mask & step) z.values_[mask] += z.values_[mask ^ step];
        }
    }
    return z;
}

// y_I = alternating sum of z_J over J contained in I; inverse of zeta_transform.
inline SetFunction mobius_transform(const SetFunction& z) {
    if (!z.zero_at_empty()) {
        throw std::invalid_argument("mobius_transform: value at the empty set must be 0");
    }
    SetFunction y = z;
    const std::size_t n = y.values_.size();
    for (int bit = 0; bit < y.d_; ++bit) {
        const std::size_t step = std::size_t{1} << bit;
        for (std::size_t mask = 0; mask < n; ++mask) {
            if (mask & step) y.values_[mask] -= y.values_[mask ^ step];
        }
    }
    return y;
}

// H_i = 1 + 1/2 + ... + 1/i, with H_0 = 0 as the empty sum.
inline Rational harmonic(unsigned long i) {
    Rational h = 0;
    for (unsigned long k = 1; k <= i; ++k) h += make_rational(1, k);
    return h;
}

}  // namespace genperm
