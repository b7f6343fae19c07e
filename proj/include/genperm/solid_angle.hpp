#pragma once

// Solid-angle sums for the regular lattice tetrahedron in R^4 and the
// linear coefficient of solid-angle polynomials of four-dimensional
// signed simplex sums. This is the one floating-point corner of the
// library: the edge angle arccos(1/3) / (2 pi) is irrational.

#include "genperm/genperm.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace genperm {

// Local solid angles of the full-dimensional regular tetrahedron at a
// lattice point in the interior, on a facet, and on an edge. The vertex
// angle never enters the linear coefficient and stays a parameter.
struct AngleConstants {
    double alpha = 1.0;
    double beta = 0.5;
    double gamma = std::acos(1.0 / 3.0) / (2.0 * std::numbers::pi);
};

// 6 gamma - 7/6 = (3/pi) arccos(1/3) - 7/6, the linear coefficient of
// the solid-angle polynomial of the tetrahedron. Positive.
inline double tetra_linear_coeff() {
    return 3.0 / std::numbers::pi * std::acos(1.0 / 3.0) - 7.0 / 6.0;
}

// Coefficients (constant first) of
//   alpha C(n-1,3) + 4 beta C(n-1,2) + 6 gamma (n-1) + 4 delta
// expanded in n. The n^1 coefficient is delta-independent and the n^3
// coefficient is the normalized volume 1/6.
inline std::array<double, 4> solid_angle_poly_tetra(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("solid_angle_poly_tetra: delta must lie in (0, 1)");
    }
    const AngleConstants angles;
    const auto shifted = [](int shift) {  // coefficients of (n-1)(n-2)...(n-shift)
        std::array<double, 4> poly{1.0, 0.0, 0.0, 0.0};
        for (int root = 1; root <= shift; ++root) {
            std::array<double, 4> next{};
            for (int i = 0; i < 3; ++i) {
                next[i + 1] += poly[i];
                next[i] -= static_cast<double>(root) * poly[i];
            }
            next[3] += -static_cast<double>(root) * poly[3];
            poly = next;
        }
        return poly;
    };
    const std::array<double, 4> falling3 = shifted(3);  // (n-1)(n-2)(n-3)
    const std::array<double, 4> falling2 = shifted(2);  // (n-1)(n-2)
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        out[i] = angles.alpha * falling3[i] / 6.0 + 4.0 * angles.beta * falling2[i] / 2.0;
    }
    out[0] += -6.0 * angles.gamma + 4.0 * delta;
    out[1] += 6.0 * angles.gamma;
    return out;
}

// Linear solid-angle coefficient of a valid integer signed simplex sum
// in R^4. Every summand of dimension below three contributes nothing,
// and each 4-element simplex contributes the tetrahedron constant, so
// the result is the coefficient of the full set times that constant.
inline double a1_genperm_d4(const GenPermRep& rep) {
    if (rep.ground_size() != 4) {
        throw std::invalid_argument("a1_genperm_d4: rep must live on a ground set of size 4");
    }
    if (!rep.integer_valued()) {
        throw std::invalid_argument("a1_genperm_d4: coefficients must be integers");
    }
    if (!validate_y(rep).valid) {
        throw std::invalid_argument("a1_genperm_d4: coefficients do not define a generalized permutahedron");
    }
    const Rational y_full = rep.y()[Subset::full_set(4)];
    return y_full.get_d() * tetra_linear_coeff();
}

// The example with negative linear solid-angle term: all six pairs with
// coefficient 1 and the full set with coefficient -1.
inline GenPermRep negative_a1_example() {
    SetFunction y(4);
    for (std::uint32_t m = 1; m < 16; ++m) {
        if (std::popcount(m) == 2) y.set_mask(m, 1);
    }
    y.set_mask(15, -1);
    return GenPermRep{y};
}

}  // namespace genperm
