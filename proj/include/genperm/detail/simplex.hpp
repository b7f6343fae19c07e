#pragma once

// Exact phase-I simplex over rationals: find x >= 0 with A x = b, or
// report infeasibility. Bland's rule guarantees termination; the systems
// that arise here are small and dense, so a plain tableau suffices.

#include "genperm/linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace genperm::detail {

inline std::optional<std::vector<Rational>> nonnegative_solution(Matrix a,
                                                                 std::vector<Rational> b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m) throw std::invalid_argument("nonnegative_solution: shape mismatch");

    // Tableau [A | I | b] with artificial basis; rows flipped so b >= 0.
    const std::size_t width = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a.at(i, j)) : a.at(i, j);
        t[i][n + i] = 1;
        t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Objective: minimize the sum of artificials. With the artificial
    // basis, the reduced cost of column j is -sum_i t[i][j]; we keep the
    // negated row obj[j] = sum_i t[i][j] and pivot it along.
    std::vector<Rational> obj(width);
    for (std::size_t j = 0; j < width; ++j) {
        for (std::size_t i = 0; i < m; ++i) obj[j] += t[i][j];
    }

    auto pivot = [&](std::size_t row, std::size_t col) {
        const Rational p = t[row][col];
        for (std::size_t j = 0; j < width; ++j) t[row][j] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || t[i][col] == 0) continue;
            const Rational f = t[i][col];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[row][j];
        }
        if (obj[col] != 0) {
            const Rational f = obj[col];
            for (std::size_t j = 0; j < width; ++j) obj[j] -= f * t[row][j];
        }
        basis[row] = col;
    };

    while (true) {
        // Bland: entering column is the smallest original index that improves.
        std::size_t enter = width;
        for (std::size_t j = 0; j < n; ++j) {
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            const Rational lhs = t[i][width - 1] * t[leave][enter];
            const Rational rhs = t[leave][width - 1] * t[i][enter];
            if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) {
            throw std::logic_error("phase-I simplex: unbounded column in a bounded objective");
        }
        pivot(leave, enter);
    }

    if (obj[width - 1] != 0) return std::nullopt;  // artificials stuck above zero

    // Degenerate artificials left in the basis sit at value 0; swap them
    // for an original column when possible (a fully zero row is redundant).
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (t[i][j] != 0) {
                pivot(i, j);
                break;
            }
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) x[basis[i]] = t[i][width - 1];
    }
    return x;
}

}  // namespace genperm::detail
