#pragma once

// Minkowski linear functionals on generalized permutahedra, identified
// with their value vectors on the standard simplices. Covers the ray
// functionals v_E^T of the cone of positive translation-invariant
// functionals, compatible directions realizing them geometrically, the
// symmetric basis f_k, the change-of-basis pair A / B, and the exact
// nonnegativity certificate for the lattice-count linear coefficient.

#include "genperm/detail/simplex.hpp"
#include "genperm/genperm.hpp"
#include "genperm/linalg.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace genperm {

// Values phi(Delta_I) for all nonempty I, stored densely by mask.
class LinearFunctional {
public:
    explicit LinearFunctional(int d) : d_((check_ground_size(d), d)), values_(std::size_t{1} << d) {}

    int ground_size() const { return d_; }

    const Rational& operator[](const Subset& I) const {
        if (I.ground_size() != d_) throw std::invalid_argument("subset from a different ground set");
        return values_[I.bits()];
    }
    const Rational& at_mask(std::uint32_t mask) const { return values_[mask]; }

    void set(const Subset& I, Rational v) {
        if (I.ground_size() != d_) throw std::invalid_argument("subset from a different ground set");
        if (I.is_empty()) throw std::invalid_argument("functionals vanish on the empty simplex");
        values_[I.bits()] = std::move(v);
    }

    // Translation invariance is exactly: value 0 on every point Delta_{i}.
    bool translation_invariant() const {
        for (int i = 0; i < d_; ++i) {
            if (values_[std::size_t{1} << i] != 0) return false;
        }
        return true;
    }

    LinearFunctional& operator+=(const LinearFunctional& other) {
        if (other.d_ != d_) throw std::invalid_argument("functionals on different ground sets");
        for (std::size_t m = 1; m < values_.size(); ++m) values_[m] += other.values_[m];
        return *this;
    }
    friend LinearFunctional operator+(LinearFunctional a, const LinearFunctional& b) {
        return a += b;
    }

    LinearFunctional scaled(const Rational& factor) const {
        LinearFunctional out(d_);
        for (std::size_t m = 1; m < values_.size(); ++m) out.values_[m] = values_[m] * factor;
        return out;
    }

    friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

private:
    int d_;
    std::vector<Rational> values_;
};

// A symmetric translation-invariant functional is determined by the
// values on one simplex per cardinality: values[i-1] = phi(Delta_{i+1}).
struct SymmetricFunctional {
    int d = 0;
    std::vector<Rational> values;  // length d - 1

    friend bool operator==(const SymmetricFunctional&, const SymmetricFunctional&) = default;
};

inline void check_symmetric_shape(const SymmetricFunctional& phi) {
    if (phi.d < 2 || phi.values.size() != static_cast<std::size_t>(phi.d - 1)) {
        throw std::invalid_argument("symmetric functional must carry d-1 values with d >= 2");
    }
}

// phi(sum_I y_I Delta_I) = sum_I y_I phi(Delta_I).
inline Rational eval_functional(const LinearFunctional& phi, const GenPermRep& rep) {
    if (phi.ground_size() != rep.ground_size()) {
        throw std::invalid_argument("eval_functional: dimension mismatch");
    }
    Rational total = 0;
    const SetFunction& y = rep.y();
    for (std::uint32_t m = 1; m < y.table_size(); ++m) {
        if (y.at_mask(m) != 0) total += y.at_mask(m) * phi.at_mask(m);
    }
    return total;
}

inline void check_ray_index(const Subset& E, const Subset& T) {
    if (E.cardinality() != 2) throw std::invalid_argument("ray index E must have two elements");
    if (!E.subset_of(T)) throw std::invalid_argument("ray index requires E contained in T");
}

// v_E^T(Delta_I) = 1 iff E is contained in I and I in T.
inline LinearFunctional ray_functional(const Subset& E, const Subset& T) {
    check_ray_index(E, T);
    LinearFunctional phi(E.ground_size());
    for_each_submask(T.minus(E).bits(), [&](std::uint32_t sub) {
        phi.set(Subset(E.bits() | sub, E.ground_size()), 1);
    });
    return phi;
}

// A direction u whose face picks out exactly the simplices counted by
// v_E^T: zero on E, negative and decreasing over T \ E, and positive
// values d, d+1, ... over the complement of T.
inline std::vector<long long> compatible_direction(const Subset& E, const Subset& T) {
    check_ray_index(E, T);
    const int d = E.ground_size();
    if (d == 2) {
        throw std::invalid_argument(
            "no compatible direction exists for d = 2; the ray value is y_E itself");
    }
    std::vector<long long> u(d, 0);
    long long next_negative = -1;
    long long next_positive = d;
    for (int k = 1; k <= d; ++k) {
        if (E.contains(k)) continue;
        if (T.contains(k)) {
            u[k - 1] = next_negative--;
        } else {
            u[k - 1] = next_positive++;
        }
    }
    return u;
}

// (f_k)(Delta_{i+1}) = C(i+1, 2) * C(d-i-1, k-i).
inline SymmetricFunctional f_basis(int d, int k) {
    if (d < 2) throw std::invalid_argument("f_basis: d must be at least 2");
    if (k < 1 || k > d - 1) throw std::invalid_argument("f_basis: k out of range");
    SymmetricFunctional phi{d, std::vector<Rational>(d - 1)};
    for (int i = 1; i <= d - 1; ++i) {
        if (k - i < 0) continue;
        phi.values[i - 1] = Rational(binomial(i + 1, 2) * binomial(d - i - 1, k - i));
    }
    return phi;
}

// Extension of a symmetric functional to all simplices by cardinality.
inline LinearFunctional symmetric_extension(const SymmetricFunctional& phi) {
    check_symmetric_shape(phi);
    LinearFunctional out(phi.d);
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << phi.d); ++m) {
        const int c = std::popcount(m);
        if (c >= 2) out.set(Subset(m, phi.d), phi.values[c - 2]);
    }
    return out;
}

struct BasisMatrix {
    int d = 0;
    Matrix entries;
};

// Columns are the f_k expressed in simplex values: a_{ik} = C(i+1,2) C(d-i-1, k-i).
inline BasisMatrix basis_matrix(int d) {
    if (d < 2) throw std::invalid_argument("basis_matrix: d must be at least 2");
    Matrix a(d - 1, d - 1);
    for (int i = 1; i <= d - 1; ++i) {
        for (int k = 1; k <= d - 1; ++k) {
            if (k - i < 0) continue;
            a.at(i - 1, k - 1) = Rational(binomial(i + 1, 2) * binomial(d - i - 1, k - i));
        }
    }
    return {d, std::move(a)};
}

namespace detail {

// b_{kj} = (-1)^{k+j} C(d-k-1, j-k) / C(j+1, 2), the closed-form inverse.
inline Matrix inverse_basis_entries(int d) {
    Matrix b(d - 1, d - 1);
    for (int k = 1; k <= d - 1; ++k) {
        for (int j = k; j <= d - 1; ++j) {
            Rational entry = make_rational(binomial(d - k - 1, j - k), binomial(j + 1, 2));
            b.at(k - 1, j - 1) = ((k + j) % 2 == 0) ? entry : Rational(-entry);
        }
    }
    return b;
}

}  // namespace detail

inline BasisMatrix inverse_basis_matrix(int d) {
    if (d < 2) throw std::invalid_argument("inverse_basis_matrix: d must be at least 2");
    Matrix b = detail::inverse_basis_entries(d);
    if (basis_matrix(d).entries * b != Matrix::identity(d - 1)) {
        throw std::logic_error("inverse_basis_matrix: A*B is not the identity");
    }
    return {d, std::move(b)};
}

// Coordinates of phi in the f-basis: c = B * values. The reconstruction
// A * c = values is re-checked; phi lies in the cone of positive
// symmetric translation-invariant functionals iff all c_k >= 0.
inline std::vector<Rational> decompose_symmetric(const SymmetricFunctional& phi) {
    check_symmetric_shape(phi);
    const Matrix b = detail::inverse_basis_entries(phi.d);
    std::vector<Rational> c = b * phi.values;
    if (basis_matrix(phi.d).entries * c != phi.values) {
        throw std::logic_error("decompose_symmetric: reconstruction failed");
    }
    return c;
}

// The lattice-count linear coefficient as a symmetric functional:
// value H_i on the simplex with i+1 vertices.
inline SymmetricFunctional ehrhart_linear_functional(int d) {
    if (d < 2) throw std::invalid_argument("ehrhart_linear_functional: d must be at least 2");
    SymmetricFunctional phi{d, std::vector<Rational>(d - 1)};
    Rational h = 0;
    for (int i = 1; i <= d - 1; ++i) {
        h += make_rational(1, i);
        phi.values[i - 1] = h;
    }
    return phi;
}

struct PositivityCertificate {
    std::vector<Rational> c;
    bool all_nonnegative = false;
    bool q_identity_verified = false;
};

// Exact certificate that the coefficients of the lattice-count linear
// functional in the f-basis are nonnegative: computes c = B h, checks
// the sign of every entry, and verifies for every k that the row
// polynomial sum_j (-1)^{k+j} C(d-k-1, j-k) t^j (read off B, scaled by
// C(j+1,2)) equals t^k (1-t)^{d-k-1} coefficient by coefficient.
inline PositivityCertificate positivity_certificate(int d) {
    if (d < 2) throw std::invalid_argument("positivity_certificate: d must be at least 2");
    const Matrix b = detail::inverse_basis_entries(d);
    const std::vector<Rational> c = b * ehrhart_linear_functional(d).values;

    bool nonneg = true;
    for (const Rational& ck : c) {
        if (ck < 0) {
            nonneg = false;
            break;
        }
    }

    // powers[m] = (1 - t)^m, built incrementally
    std::vector<Polynomial> powers(d - 1);
    powers[0] = {1};
    for (int m = 1; m <= d - 2; ++m) powers[m] = poly_mul(powers[m - 1], Polynomial{1, -1});

    bool identity = true;
    for (int k = 1; k <= d - 1 && identity; ++k) {
        Polynomial lhs(d);
        for (int j = k; j <= d - 1; ++j) {
            lhs[j] = b.at(k - 1, j - 1) * Rational(binomial(j + 1, 2));
        }
        Polynomial rhs(k);  // t^k shift
        rhs.insert(rhs.end(), powers[d - k - 1].begin(), powers[d - k - 1].end());
        poly_trim(lhs);
        poly_trim(rhs);
        identity = (lhs == rhs);
    }

    return {c, nonneg, identity};
}

struct RayCoefficient {
    Subset E, T;
    Rational value;
};

struct PositiveDecomposition {
    bool positive = false;
    std::vector<RayCoefficient> coefficients;  // nonzero entries only
};

namespace detail {

// All ray indices (E, T), ordered by |T|, then T, then E in list order.
inline std::vector<std::pair<Subset, Subset>> ray_indices(int d) {
    std::vector<std::pair<Subset, Subset>> out;
    const std::uint32_t full = (std::uint32_t{1} << d) - 1;
    for (std::uint32_t t = 0; t <= full; ++t) {
        if (std::popcount(t) < 2) continue;
        for_each_submask(t, [&](std::uint32_t e) {
            if (std::popcount(e) == 2) out.emplace_back(Subset(e, d), Subset(t, d));
        });
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second.cardinality() != b.second.cardinality()) {
            return a.second.cardinality() < b.second.cardinality();
        }
        if (!(a.second == b.second)) return lex_precedes(a.second, b.second);
        return lex_precedes(a.first, b.first);
    });
    return out;
}

}  // namespace detail

// Writes phi as sum of c_E^T v_E^T. The rays span the translation-invariant
// functionals but are not independent, so a canonical representative is
// produced first: each simplex value phi(Delta_S) is attributed to the
// lexicographically first pair inside S and pushed down the interval
// [E(S), S] by Moebius inversion. That solution reconstructs phi exactly;
// if it is not already nonnegative, an exact phase-I simplex searches the
// whole coefficient space. By cone duality a nonnegative solution exists
// iff phi is positive, so `positive` reports exactly that.
inline PositiveDecomposition decompose_positive(const LinearFunctional& phi) {
    const int d = phi.ground_size();
    if (!phi.translation_invariant()) {
        throw std::invalid_argument("decompose_positive: functional is not translation-invariant");
    }

    std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> base;
    const std::uint32_t full = (std::uint32_t{1} << d) - 1;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (std::popcount(s) < 2 || phi.at_mask(s) == 0) continue;
        const std::uint32_t low = s & -s;
        const std::uint32_t rest = s ^ low;
        const std::uint32_t e = low | (rest & -rest);  // two smallest elements of S
        const int size_s = std::popcount(s);
        for_each_submask(s ^ e, [&](std::uint32_t sub) {
            const std::uint32_t t = e | sub;
            const int sign = (size_s - std::popcount(t)) % 2 == 0 ? 1 : -1;
            base[{e, t}] += Rational(sign) * phi.at_mask(s);
        });
    }

    bool base_nonneg = true;
    for (const auto& [key, value] : base) {
        if (value < 0) {
            base_nonneg = false;
            break;
        }
    }

    auto collect = [&](auto&& get_value,
                       const std::vector<std::pair<Subset, Subset>>& order) {
        std::vector<RayCoefficient> out;
        for (const auto& [e, t] : order) {
            Rational v = get_value(e, t);
            if (v != 0) out.push_back({e, t, std::move(v)});
        }
        return out;
    };

    const std::vector<std::pair<Subset, Subset>> order = detail::ray_indices(d);
    if (base_nonneg) {
        return {true, collect(
                          [&](const Subset& e, const Subset& t) -> Rational {
                              auto it = base.find({e.bits(), t.bits()});
                              return it == base.end() ? Rational(0) : it->second;
                          },
                          order)};
    }

    // Equations: one per simplex with at least two vertices.
    std::vector<std::uint32_t> eq_masks;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (std::popcount(s) >= 2) eq_masks.push_back(s);
    }
    Matrix a(eq_masks.size(), order.size());
    std::vector<Rational> rhs(eq_masks.size());
    for (std::size_t row = 0; row < eq_masks.size(); ++row) {
        const std::uint32_t s = eq_masks[row];
        for (std::size_t col = 0; col < order.size(); ++col) {
            const std::uint32_t e = order[col].first.bits(), t = order[col].second.bits();
            if ((e & ~s) == 0 && (s & ~t) == 0) a.at(row, col) = 1;
        }
        rhs[row] = phi.at_mask(s);
    }
    const auto solution = detail::nonnegative_solution(std::move(a), std::move(rhs));
    if (solution) {
        return {true, collect(
                          [&](const Subset& e, const Subset& t) -> Rational {
                              for (std::size_t col = 0; col < order.size(); ++col) {
                                  if (order[col].first == e && order[col].second == t) {
                                      return (*solution)[col];
                                  }
                              }
                              return 0;
                          },
                          order)};
    }
    return {false, collect(
                       [&](const Subset& e, const Subset& t) -> Rational {
                           auto it = base.find({e.bits(), t.bits()});
                           return it == base.end() ? Rational(0) : it->second;
                       },
                       order)};
}

// Rebuilds the functional from ray coefficients; inverse check for the above.
inline LinearFunctional combine_rays(int d, const std::vector<RayCoefficient>& coefficients) {
    LinearFunctional out(d);
    for (const RayCoefficient& rc : coefficients) {
        out += ray_functional(rc.E, rc.T).scaled(rc.value);
    }
    return out;
}

}  // namespace genperm
