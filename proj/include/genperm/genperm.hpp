#pragma once

// Generalized permutahedra as signed Minkowski sums of standard
// simplices. Validation of the defining inequalities (and of the
// equivalent supermodularity of the zeta transform), greedy vertex
// enumeration, faces in a direction, brute-force lattice points, and
// affine dimension.

#include "genperm/linalg.hpp"
#include "genperm/set_function.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

namespace genperm {

// A candidate signed simplex sum: dimension d plus the coefficients y_I.
// Whether it actually defines a polytope is decided by validate_y.
class GenPermRep {
public:
    explicit GenPermRep(SetFunction y) : y_(std::move(y)) {
        if (!y_.zero_at_empty()) {
            throw std::invalid_argument("GenPermRep: coefficient at the empty set must be 0");
        }
    }

    int ground_size() const { return y_.ground_size(); }
    const SetFunction& y() const { return y_; }
    bool integer_valued() const { return y_.integer_valued(); }

    friend bool operator==(const GenPermRep&, const GenPermRep&) = default;

private:
    SetFunction y_;
};

struct ViolationWitness {
    Subset E, T;     // |E| = 2, E subset of T
    Rational value;  // the violated sum, < 0
};

struct YValidation {
    bool valid = false;
    std::optional<ViolationWitness> witness;
};

struct FacetWitness {
    Subset K;
    int i = 0, j = 0;  // i < j, both outside K
};

struct ZValidation {
    bool valid = false;
    std::optional<FacetWitness> witness;
};

// Direct evaluation of sum of y_I over E subset of I subset of T.
inline Rational interval_sum(const SetFunction& y, const Subset& E, const Subset& T) {
    if (E.ground_size() != y.ground_size() || T.ground_size() != y.ground_size()) {
        throw std::invalid_argument("interval_sum: ground-set mismatch");
    }
    if (!E.subset_of(T)) throw std::invalid_argument("interval_sum: E must be contained in T");
    Rational total = 0;
    for_each_submask(T.minus(E).bits(), [&](std::uint32_t sub) {
        total += y.at_mask(E.bits() | sub);
    });
    return total;
}

namespace detail {

// Scans all pairs (E, T) in element-list order. `sum_at` evaluates the
// defining sum for one pair; the first violation becomes the witness.
template <typename SumFn>
YValidation scan_y_inequalities(int d, SumFn&& sum_at) {
    for (int i = 1; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            const std::uint32_t e_bits =
                (std::uint32_t{1} << (i - 1)) | (std::uint32_t{1} << (j - 1));
            const std::uint32_t comp = ~e_bits & ((std::uint32_t{1} << d) - 1);
            std::optional<Subset> best;
            Rational best_value;
            for_each_submask(comp, [&](std::uint32_t sub) {
                const Subset T(e_bits | sub, d);
                const Rational s = sum_at(Subset(e_bits, d), T);
                if (s < 0 && (!best || lex_precedes(T, *best))) {
                    best = T;
                    best_value = s;
                }
            });
            if (best) {
                return {false, ViolationWitness{Subset(e_bits, d), *best, best_value}};
            }
        }
    }
    return {true, std::nullopt};
}

}  // namespace detail

// Checks the defining inequalities by literal interval summation over y.
inline YValidation validate_y_direct(const GenPermRep& rep) {
    const SetFunction& y = rep.y();
    return detail::scan_y_inequalities(
        y.ground_size(), [&](const Subset& E, const Subset& T) { return interval_sum(y, E, T); });
}

// Same predicate, but each sum is read off the zeta transform in O(1):
// sum over [E, T] of y equals z_T - z_{T\{i}} - z_{T\{j}} + z_{T\E}.
// On failure the witness value is recomputed by direct summation.
inline YValidation validate_y(const GenPermRep& rep) {
    const SetFunction& y = rep.y();
    const SetFunction z = zeta_transform(y);
    YValidation result = detail::scan_y_inequalities(
        y.ground_size(), [&](const Subset& E, const Subset& T) {
            const std::uint32_t t = T.bits(), e = E.bits();
            const std::uint32_t upper = e & (e - 1);  // bit of the larger element of E
            const std::uint32_t lower = e ^ upper;    // bit of the smaller element of E
            return Rational(z.at_mask(t) - z.at_mask(t ^ lower) - z.at_mask(t ^ upper) +
                            z.at_mask(t ^ e));
        });
    if (!result.valid) {
        ViolationWitness& w = *result.witness;
        const Rational direct = interval_sum(y, w.E, w.T);
        if (direct != w.value) {
            throw std::logic_error("validate_y: zeta shortcut disagrees with direct sum");
        }
        w.value = direct;
    }
    return result;
}

// Supermodularity via its facet description: z_{K+i} + z_{K+j} <= z_{K+i+j} + z_K
// for all K and all i != j outside K.
inline ZValidation validate_z_supermodular(const SetFunction& z) {
    if (!z.zero_at_empty()) {
        throw std::invalid_argument("validate_z_supermodular: value at the empty set must be 0");
    }
    const int d = z.ground_size();
    for (int i = 1; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            const std::uint32_t bi = std::uint32_t{1} << (i - 1);
            const std::uint32_t bj = std::uint32_t{1} << (j - 1);
            const std::uint32_t comp = ~(bi | bj) & ((std::uint32_t{1} << d) - 1);
            std::optional<FacetWitness> found;
            for_each_submask(comp, [&](std::uint32_t k) {
                if (found) return;
                if (z.at_mask(k | bi) + z.at_mask(k | bj) >
                    z.at_mask(k | bi | bj) + z.at_mask(k)) {
                    found = FacetWitness{Subset(k, d), i, j};
                }
            });
            if (found) return {false, found};
        }
    }
    return {true, std::nullopt};
}

// Both validators answer the same membership question. A disagreement
// would be an implementation bug, not bad input.
inline bool equivalence_check(const SetFunction& y) {
    const GenPermRep rep{y};
    const bool by_y = validate_y(rep).valid;
    const bool by_z = validate_z_supermodular(zeta_transform(y)).valid;
    if (by_y != by_z) {
        throw std::logic_error("equivalence_check: y-inequalities and supermodularity disagree");
    }
    return by_y;
}

using Point = std::vector<Rational>;

struct LatticePoint {
    std::vector<Integer> coords;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
        return a.coords < b.coords;
    }
};

namespace detail {

inline void require_supermodular(const SetFunction& z) {
    const ZValidation v = validate_z_supermodular(z);
    if (!v.valid) {
        throw std::invalid_argument("z is not supermodular (witness K=" + to_string(v.witness->K) +
                                    ", i=" + std::to_string(v.witness->i) +
                                    ", j=" + std::to_string(v.witness->j) + ")");
    }
}

}  // namespace detail

// Greedy vertex enumeration for the base polytope of a supermodular z:
// every permutation ordering yields one vertex, and every vertex arises
// this way. Deduplicated, lexicographically sorted.
inline std::vector<Point> vertices(const SetFunction& z) {
    detail::require_supermodular(z);
    const int d = z.ground_size();
    std::vector<int> order(d);
    for (int i = 0; i < d; ++i) order[i] = i + 1;
    std::set<Point> seen;
    do {
        Point v(d);
        std::uint32_t prefix = 0;
        for (int k = 0; k < d; ++k) {
            const std::uint32_t next = prefix | (std::uint32_t{1} << (order[k] - 1));
            v[order[k] - 1] = z.at_mask(next) - z.at_mask(prefix);
            prefix = next;
        }
        seen.insert(std::move(v));
    } while (std::next_permutation(order.begin(), order.end()));
    return {seen.begin(), seen.end()};
}

// Vertices maximizing the inner product with u; their hull is the face in direction u.
inline std::vector<Point> face_in_direction(const SetFunction& z, const Point& u) {
    if (static_cast<int>(u.size()) != z.ground_size()) {
        throw std::invalid_argument("face_in_direction: direction has wrong length");
    }
    if (std::all_of(u.begin(), u.end(), [](const Rational& c) { return c == 0; })) {
        throw std::invalid_argument("face_in_direction: direction must be nonzero");
    }
    const std::vector<Point> verts = vertices(z);
    std::optional<Rational> best;
    std::vector<Point> face;
    for (const Point& v : verts) {
        Rational ip = 0;
        for (std::size_t i = 0; i < u.size(); ++i) ip += u[i] * v[i];
        if (!best || ip > *best) {
            best = ip;
            face.clear();
            face.push_back(v);
        } else if (ip == *best) {
            face.push_back(v);
        }
    }
    return face;
}

inline std::vector<Point> face_in_direction(const SetFunction& z, const std::vector<long long>& u) {
    Point ru(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) ru[i] = Rational(static_cast<long>(u[i]));
    return face_in_direction(z, ru);
}

// Normalized length of a face of dimension at most one: 0 for a point,
// |lambda| for a segment parallel to lambda (e_i - e_j).
inline Rational edge_length_normalized(const std::vector<Point>& face) {
    if (face.empty()) throw std::invalid_argument("edge_length_normalized: empty face");
    if (face.size() == 1) return 0;
    if (face.size() > 2) {
        throw std::invalid_argument("edge_length_normalized: face has more than two vertices");
    }
    const Point& a = face[0];
    const Point& b = face[1];
    if (a.size() != b.size()) throw std::invalid_argument("edge_length_normalized: mixed dimensions");
    int plus = -1, minus = -1;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Rational diff = b[k] - a[k];
        if (diff == 0) continue;
        if (diff > 0) {
            if (plus >= 0) throw std::invalid_argument("edge not parallel to any e_i - e_j");
            plus = static_cast<int>(k);
        } else {
            if (minus >= 0) throw std::invalid_argument("edge not parallel to any e_i - e_j");
            minus = static_cast<int>(k);
        }
    }
    if (plus < 0 || minus < 0 || b[plus] - a[plus] != a[minus] - b[minus]) {
        throw std::invalid_argument("edge not parallel to any e_i - e_j");
    }
    return b[plus] - a[plus];
}

namespace detail {

struct LatticeEnumerator {
    int d;
    std::vector<Integer> z;         // indexed by mask
    std::vector<Integer> lo, hi;    // per-coordinate search box
    std::vector<Integer> lo_suffix, hi_suffix;

    explicit LatticeEnumerator(const SetFunction& zf) : d(zf.ground_size()) {
        const std::size_t n = zf.table_size();
        z.resize(n);
        for (std::size_t m = 0; m < n; ++m) z[m] = to_integer(zf.at_mask(m));
        Integer singleton_total = 0;
        for (int i = 0; i < d; ++i) singleton_total += z[std::size_t{1} << i];
        lo.resize(d);
        hi.resize(d);
        for (int i = 0; i < d; ++i) {
            lo[i] = z[std::size_t{1} << i];
            hi[i] = z[n - 1] - (singleton_total - lo[i]);
        }
        lo_suffix.assign(d + 1, 0);
        hi_suffix.assign(d + 1, 0);
        for (int i = d - 1; i >= 0; --i) {
            lo_suffix[i] = lo_suffix[i + 1] + lo[i];
            hi_suffix[i] = hi_suffix[i + 1] + hi[i];
        }
    }

    // Every subset constraint is checked exactly once, at the step where
    // its largest element gets assigned.
    bool new_constraints_hold(const std::vector<Integer>& x, int k) const {
        const std::uint32_t below = (std::uint32_t{1} << k) - 1;
        bool ok = true;
        for_each_submask(below, [&](std::uint32_t sub) {
            if (!ok) return;
            const std::uint32_t mask = sub | (std::uint32_t{1} << k);
            Integer sum = 0;
            for (std::uint32_t m = mask; m != 0; m &= m - 1) {
                sum += x[std::countr_zero(m)];
            }
            if (sum < z[mask]) ok = false;
        });
        return ok;
    }

    void recurse(std::vector<Integer>& x, int k, Integer partial,
                 std::vector<LatticePoint>& out) const {
        const Integer target = z[(std::size_t{1} << d) - 1];
        // remaining coordinates must be able to close the sum to the target
        Integer from = lo[k], to = hi[k];
        {
            Integer need_lo = target - partial - hi_suffix[k + 1];
            Integer need_hi = target - partial - lo_suffix[k + 1];
            if (need_lo > from) from = need_lo;
            if (need_hi < to) to = need_hi;
        }
        for (Integer v = from; v <= to; ++v) {
            x[k] = v;
            if (!new_constraints_hold(x, k)) continue;
            if (k + 1 == d) {
                out.push_back(LatticePoint{x});
            } else {
                recurse(x, k + 1, Integer(partial + v), out);
            }
        }
    }

    std::vector<LatticePoint> run_range(const Integer& first_from, const Integer& first_to) const {
        std::vector<LatticePoint> out;
        std::vector<Integer> x(d);
        if (d == 1) {
            for (Integer v = first_from; v <= first_to; ++v) {
                x[0] = v;
                if (v == z[1]) out.push_back(LatticePoint{x});
            }
            return out;
        }
        for (Integer v = first_from; v <= first_to; ++v) {
            x[0] = v;
            if (!new_constraints_hold(x, 0)) continue;
            recurse(x, 1, v, out);
        }
        return out;
    }
};

}  // namespace detail

// All integer points x with sum x_i = z_[d] and sum over I of x_i >= z_I.
// Output is lexicographically sorted; workers split the first coordinate.
inline std::vector<LatticePoint> enumerate_lattice_points(const SetFunction& z, int threads = 1) {
    detail::require_supermodular(z);
    if (!z.integer_valued()) {
        throw std::invalid_argument("enumerate_lattice_points: z must be integer-valued");
    }
    const detail::LatticeEnumerator enumerator(z);
    const Integer target = enumerator.z[z.table_size() - 1];
    Integer from = enumerator.lo[0], to = enumerator.hi[0];
    if (enumerator.d > 1) {
        const Integer need_lo = target - enumerator.hi_suffix[1];
        const Integer need_hi = target - enumerator.lo_suffix[1];
        if (need_lo > from) from = need_lo;
        if (need_hi < to) to = need_hi;
    }
    if (threads <= 1 || to - from < 2) {
        return enumerator.run_range(from, to);
    }
    Integer width = to - from + 1;
    const int workers = static_cast<int>(std::min(Integer(threads), width).get_si());
    std::vector<std::vector<LatticePoint>> parts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const Integer a = from + (width * w) / workers;
        const Integer b = from + (width * (w + 1)) / workers - 1;
        pool.emplace_back([&, w, a, b] { parts[w] = enumerator.run_range(a, b); });
    }
    for (std::thread& t : pool) t.join();
    std::vector<LatticePoint> out;
    for (std::vector<LatticePoint>& p : parts) {
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    return out;
}

// Affine dimension of the vertex set.
inline int dimension(const SetFunction& z) {
    const std::vector<Point> verts = vertices(z);
    if (verts.size() <= 1) return 0;
    Matrix diffs(verts.size() - 1, verts[0].size());
    for (std::size_t i = 1; i < verts.size(); ++i) {
        for (std::size_t j = 0; j < verts[0].size(); ++j) {
            diffs.at(i - 1, j) = verts[i][j] - verts[0][j];
        }
    }
    return static_cast<int>(rank(std::move(diffs)));
}

}  // namespace genperm
