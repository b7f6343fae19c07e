#pragma once

// Small dense exact-rational matrices and polynomials. Everything here
// is Gaussian elimination and convolution on tiny inputs; no pivoting
// heuristics are needed because the arithmetic is exact.

#include "genperm/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace genperm {

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

inline std::vector<Rational> operator*(const Matrix& m, const std::vector<Rational>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<Rational> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    }
    return out;
}

inline std::size_t rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, col) == 0) continue;
            const Rational factor = m.at(i, col) / m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        ++r;
    }
    return r;
}

inline Matrix inverse(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::invalid_argument("inverse: singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m.at(col, j), m.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        const Rational p = m.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col) == 0) continue;
            const Rational factor = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) -= factor * m.at(col, j);
                inv.at(i, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Polynomials as coefficient vectors, constant term first.
using Polynomial = std::vector<Rational>;

inline void poly_trim(Polynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline Polynomial poly_scale(Polynomial p, const Rational& factor) {
    for (Rational& c : p) c *= factor;
    return p;
}

inline Rational poly_eval(const Polynomial& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Unique polynomial of degree < n through the points (0, v[0]), ..., (n-1, v[n-1]).
inline Polynomial lagrange_interpolate(const std::vector<Rational>& values) {
    if (values.empty()) throw std::invalid_argument("interpolation needs at least one value");
    const std::size_t n = values.size();
    Polynomial result(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] == 0) continue;
        Polynomial numer{1};
        Rational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            numer = poly_mul(numer, Polynomial{make_rational(-static_cast<long>(j)), 1});
            denom *= make_rational(static_cast<long>(i) - static_cast<long>(j));
        }
        result = poly_add(result, poly_scale(numer, values[i] / denom));
    }
    poly_trim(result);
    if (result.empty()) result.push_back(0);
    return result;
}

}  // namespace genperm
