#pragma once

// Lattice-point counts of signed simplex sums via the extended product
// formula over admissible a-vectors, Ehrhart polynomials by exact
// interpolation against the brute-force oracle, and the linear
// coefficient as a harmonic-number sum.

#include "genperm/genperm.hpp"
#include "genperm/linalg.hpp"
#include "genperm/set_function.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace genperm {

// C(x, k) = x (x-1) ... (x-k+1) / k!, valid for any rational x.
inline Rational generalized_binomial(const Rational& x, unsigned long k) {
    Rational product = 1;
    for (unsigned long t = 0; t < k; ++t) product *= x - Rational(static_cast<long>(t));
    return product / Rational(factorial(k));
}

// A weighting of subsets by nonnegative integers summing to d-1 such
// that every family M of weighted subsets covers at least 1 + (total
// weight of M) elements.
struct AVector {
    int d = 0;
    std::vector<std::pair<std::uint32_t, long>> entries;  // (mask, weight > 0), mask-ascending

    long weight_at(std::uint32_t mask) const {
        for (const auto& [m, w] : entries) {
            if (m == mask) return w;
        }
        return 0;
    }
};

namespace detail {

struct AVectorSearch {
    int d;
    std::vector<std::uint32_t> support;  // decreasing cardinality, then ascending mask
    std::vector<long> capacity_suffix;   // max weight the tail of the support can still absorb
    const std::function<void(const AVector&)>* visit;

    // The cover condition is monotone: weights only grow along a branch,
    // so a family that fails now fails in every extension.
    static bool cover_condition_holds(const std::vector<std::pair<std::uint32_t, long>>& nonzero) {
        const std::size_t n = nonzero.size();
        for (std::uint32_t family = 1; family < (std::uint32_t{1} << n); ++family) {
            std::uint32_t cover = 0;
            long weight = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (family & (std::uint32_t{1} << i)) {
                    cover |= nonzero[i].first;
                    weight += nonzero[i].second;
                }
            }
            if (std::popcount(cover) < 1 + weight) return false;
        }
        return true;
    }

    // Only families containing the set whose weight just changed can fail.
    static bool cover_condition_holds_at(const std::vector<std::pair<std::uint32_t, long>>& nonzero,
                                         std::size_t changed) {
        const std::size_t n = nonzero.size();
        const std::uint32_t others = (std::uint32_t{1} << n) - 1 - (std::uint32_t{1} << changed);
        bool ok = true;
        for_each_submask(others, [&](std::uint32_t rest) {
            if (!ok) return;
            std::uint32_t cover = nonzero[changed].first;
            long weight = nonzero[changed].second;
            for (std::uint32_t m = rest; m != 0; m &= m - 1) {
                const std::size_t i = std::countr_zero(m);
                cover |= nonzero[i].first;
                weight += nonzero[i].second;
            }
            if (std::popcount(cover) < 1 + weight) ok = false;
        });
        return ok;
    }

    void recurse(std::size_t index, long remaining,
                 std::vector<std::pair<std::uint32_t, long>>& nonzero) const {
        if (remaining == 0) {
            AVector a{d, nonzero};
            std::sort(a.entries.begin(), a.entries.end());
            (*visit)(a);
            return;
        }
        if (index == support.size() || capacity_suffix[index] < remaining) return;

        // weight 0 on this set
        recurse(index + 1, remaining, nonzero);

        // positive weights, growing until the cover condition breaks
        const std::uint32_t mask = support[index];
        const long cap = std::min<long>(remaining, std::popcount(mask) - 1);
        nonzero.emplace_back(mask, 0);
        for (long w = 1; w <= cap; ++w) {
            nonzero.back().second = w;
            if (!cover_condition_holds_at(nonzero, nonzero.size() - 1)) break;
            recurse(index + 1, remaining - w, nonzero);
        }
        nonzero.pop_back();
    }
};

}  // namespace detail

// Streams every admissible a-vector supported on the given sets with
// total weight d-1. Sets that cannot carry weight (size < 2) are kept in
// the input but never receive any.
inline void for_each_a_vector(int d, const std::vector<Subset>& support,
                              const std::function<void(const AVector&)>& visit) {
    check_ground_size(d);
    detail::AVectorSearch search;
    search.d = d;
    for (const Subset& s : support) {
        if (s.ground_size() != d) throw std::invalid_argument("support set from a different ground set");
        if (s.cardinality() >= 2) search.support.push_back(s.bits());
    }
    std::sort(search.support.begin(), search.support.end(), [](std::uint32_t a, std::uint32_t b) {
        const int ca = std::popcount(a), cb = std::popcount(b);
        return ca != cb ? ca > cb : a < b;
    });
    search.support.erase(std::unique(search.support.begin(), search.support.end()),
                         search.support.end());
    search.capacity_suffix.assign(search.support.size() + 1, 0);
    for (std::size_t i = search.support.size(); i-- > 0;) {
        search.capacity_suffix[i] =
            search.capacity_suffix[i + 1] + std::popcount(search.support[i]) - 1;
    }
    search.visit = &visit;
    std::vector<std::pair<std::uint32_t, long>> nonzero;
    search.recurse(0, d - 1, nonzero);
}

inline std::vector<AVector> enumerate_a_vectors(int d, const std::vector<Subset>& support) {
    std::vector<AVector> out;
    for_each_a_vector(d, support, [&](const AVector& a) { out.push_back(a); });
    return out;
}

namespace detail {

inline void require_valid_integer_rep(const GenPermRep& rep, const char* who) {
    if (!rep.integer_valued()) {
        throw std::invalid_argument(std::string(who) + ": coefficients must be integers");
    }
    if (!validate_y(rep).valid) {
        throw std::invalid_argument(std::string(who) +
                                    ": coefficients do not define a generalized permutahedron");
    }
}

}  // namespace detail

// |P ∩ Z^d| for an integer signed simplex sum, by the product formula
//   sum_a C(y_[d] + a_[d], a_[d]) prod_{I proper} C(y_I + a_I - 1, a_I)
// over admissible a-vectors. Weights can only sit on [d] or on sets with
// nonzero coefficient; everywhere else the factor for weight 0 is 1.
inline Integer count_lattice_points_formula(const GenPermRep& rep) {
    detail::require_valid_integer_rep(rep, "count_lattice_points_formula");
    const int d = rep.ground_size();
    const SetFunction& y = rep.y();
    const std::uint32_t full = (std::uint32_t{1} << d) - 1;

    std::vector<Integer> yi(y.table_size());
    for (std::uint32_t m = 0; m <= full; ++m) yi[m] = to_integer(y.at_mask(m));

    std::vector<Subset> support;
    for (std::uint32_t m = 1; m < full; ++m) {
        if (std::popcount(m) >= 2 && yi[m] != 0) support.emplace_back(m, d);
    }
    support.push_back(Subset::full_set(d));

    Integer total = 0;
    for_each_a_vector(d, support, [&](const AVector& a) {
        Integer term = binomial(yi[full] + a.weight_at(full), a.weight_at(full));
        for (const auto& [mask, weight] : a.entries) {
            if (term == 0) break;
            if (mask == full) continue;
            term *= binomial(yi[mask] + weight - 1, weight);
        }
        total += term;
    });
    return total;
}

struct EhrhartPolynomial {
    std::vector<Rational> coeffs;  // constant term first

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Rational operator()(long n) const { return poly_eval(coeffs, Rational(n)); }
};

// Counts lattice points of the dilates 0P, 1P, ..., (dim P)P with the
// brute-force oracle and interpolates exactly. Dilation acts on the
// z-transform, which is linear in the dilation factor.
inline EhrhartPolynomial ehrhart_polynomial(const GenPermRep& rep, int threads = 1) {
    detail::require_valid_integer_rep(rep, "ehrhart_polynomial");
    const SetFunction z = zeta_transform(rep.y());
    const int dim = dimension(z);
    std::vector<Rational> counts;
    counts.reserve(dim + 1);
    for (int n = 0; n <= dim; ++n) {
        const SetFunction zn = z.scaled(n);
        counts.emplace_back(
            Integer(static_cast<long>(enumerate_lattice_points(zn, threads).size())));
    }
    EhrhartPolynomial p{lagrange_interpolate(counts)};
    if (p.coeffs[0] != 1 || p.coeffs.back() <= 0) {
        throw std::logic_error("ehrhart_polynomial: interpolation broke a structural invariant");
    }
    return p;
}

// The linear coefficient as a functional: sum over |I| >= 2 of
// y_I * H_{|I|-1}. Defined for all valid coefficient vectors, integer or
// not; on lattice instances it equals the interpolated coefficient.
inline Rational e1(const GenPermRep& rep) {
    if (!validate_y(rep).valid) {
        throw std::invalid_argument("e1: coefficients do not define a generalized permutahedron");
    }
    const int d = rep.ground_size();
    std::vector<Rational> h(d + 1);
    for (int i = 1; i <= d; ++i) h[i] = h[i - 1] + make_rational(1, i);
    Rational total = 0;
    const SetFunction& y = rep.y();
    for (std::uint32_t m = 1; m < y.table_size(); ++m) {
        const int c = std::popcount(m);
        if (c >= 2 && y.at_mask(m) != 0) total += y.at_mask(m) * h[c - 1];
    }
    return total;
}

}  // namespace genperm
