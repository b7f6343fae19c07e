#pragma once

// Matroids given by their bases: rank oracle, contraction minors, beta
// invariants, the signed simplex-sum decompositions of matroid and
// independent-set polytopes, and the harmonic-weighted beta sums those
// decompositions bound from below.

#include "genperm/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace genperm {

// Exchange axiom, checked literally: for all bases B1, B2 and every
// x in B1 \ B2 some y in B2 \ B1 has B1 - x + y a basis again.
inline bool validate_bases(const std::vector<Subset>& bases) {
    if (bases.empty()) return false;
    const int m = bases[0].ground_size();
    const int r = bases[0].cardinality();
    std::vector<std::uint32_t> sorted;
    sorted.reserve(bases.size());
    for (const Subset& b : bases) {
        if (b.ground_size() != m || b.cardinality() != r) return false;
        sorted.push_back(b.bits());
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const auto is_basis = [&](std::uint32_t mask) {
        return std::binary_search(sorted.begin(), sorted.end(), mask);
    };
    for (std::uint32_t b1 : sorted) {
        for (std::uint32_t b2 : sorted) {
            for (std::uint32_t xm = b1 & ~b2; xm != 0; xm &= xm - 1) {
                const std::uint32_t x = xm & -xm;
                bool exchanged = false;
                for (std::uint32_t ym = b2 & ~b1; ym != 0 && !exchanged; ym &= ym - 1) {
                    const std::uint32_t y = ym & -ym;
                    exchanged = is_basis((b1 ^ x) | y);
                }
                if (!exchanged) return false;
            }
        }
    }
    return true;
}

class Matroid {
public:
    Matroid(int m, std::vector<Subset> bases) : m_((check_ground_size(m), m)) {
        for (const Subset& b : bases) {
            if (b.ground_size() != m) {
                throw std::invalid_argument("basis lives on the wrong ground set");
            }
        }
        if (!validate_bases(bases)) {
            throw std::invalid_argument("basis family violates the exchange axiom");
        }
        for (const Subset& b : bases) bases_.push_back(b.bits());
        std::sort(bases_.begin(), bases_.end());
        bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
        rank_ = std::popcount(bases_[0]);
    }

    int ground_size() const { return m_; }
    int rank() const { return rank_; }

    std::vector<Subset> bases() const {
        std::vector<Subset> out;
        out.reserve(bases_.size());
        for (std::uint32_t b : bases_) out.emplace_back(b, m_);
        return out;
    }

    const std::vector<std::uint32_t>& basis_masks() const { return bases_; }

    // r(X) = max over bases of |B ∩ X|.
    int rank_of(const Subset& x) const {
        if (x.ground_size() != m_) throw std::invalid_argument("subset from a different ground set");
        int best = 0;
        for (std::uint32_t b : bases_) best = std::max(best, std::popcount(b & x.bits()));
        return best;
    }

    // Dense rank table over all 2^m subsets.
    std::vector<int> rank_table() const {
        std::vector<int> table(std::size_t{1} << m_, 0);
        for (std::size_t mask = 0; mask < table.size(); ++mask) {
            for (std::uint32_t b : bases_) {
                table[mask] = std::max(table[mask],
                                       std::popcount(b & static_cast<std::uint32_t>(mask)));
            }
        }
        return table;
    }

    friend bool operator==(const Matroid&, const Matroid&) = default;

private:
    int m_;
    std::vector<std::uint32_t> bases_;
    int rank_ = 0;
};

struct ContractionResult {
    Matroid minor;
    std::vector<int> original_labels;  // original_labels[k-1] = element of M behind element k
};

// M/A on the ground set E \ A, relabeled order-preservingly to [m - |A|].
inline ContractionResult contraction(const Matroid& m, const Subset& a) {
    if (a.ground_size() != m.ground_size()) {
        throw std::invalid_argument("contraction: subset from a different ground set");
    }
    const std::vector<int> labels = a.complement().elements();
    if (labels.empty()) {
        throw std::invalid_argument("contraction by the full ground set leaves an empty matroid");
    }
    const int m_new = static_cast<int>(labels.size());
    const std::vector<int> ranks = m.rank_table();
    const int r_a = ranks[a.bits()];
    const int r_new = m.rank() - r_a;

    std::vector<Subset> minor_bases;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m_new); ++mask) {
        if (std::popcount(mask) != r_new) continue;
        std::uint32_t original = a.bits();
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            original |= std::uint32_t{1} << (labels[std::countr_zero(rest)] - 1);
        }
        if (ranks[original] - r_a == r_new) minor_bases.emplace_back(mask, m_new);
    }
    return {Matroid(m_new, std::move(minor_bases)), labels};
}

// beta(M) = (-1)^{r(M)} sum over X of (-1)^{|X|} r(X).
inline long long beta(const Matroid& m) {
    const std::vector<int> ranks = m.rank_table();
    long long sum = 0;
    for (std::size_t mask = 0; mask < ranks.size(); ++mask) {
        sum += (std::popcount(mask) % 2 == 0) ? ranks[mask] : -ranks[mask];
    }
    return (m.rank() % 2 == 0) ? sum : -sum;
}

inline long long signed_beta(const Matroid& m) {
    const long long b = beta(m);
    return (m.rank() % 2 == 0) ? -b : b;  // (-1)^{r+1} beta
}

// Signed beta invariants of every contraction M/A, indexed by the mask of A.
// Computed through the contracted rank function r(X ∪ A) - r(A); the sum
// for the full-set entry is empty, so it lands on 0 like every other
// rank-degenerate contraction.
struct BetaTable {
    int m = 0;
    std::vector<long long> signed_beta_of_contraction;  // size 2^m
};

inline BetaTable beta_table(const Matroid& m) {
    const std::vector<int> ranks = m.rank_table();
    const std::uint32_t full = (std::uint32_t{1} << m.ground_size()) - 1;
    BetaTable table{m.ground_size(), std::vector<long long>(ranks.size())};
    for (std::uint32_t a = 0; a <= full; ++a) {
        const std::uint32_t rest = full & ~a;
        const int r_a = ranks[a];
        long long sum = 0;
        for_each_submask(rest, [&](std::uint32_t x) {
            const int value = ranks[x | a] - r_a;
            sum += (std::popcount(x) % 2 == 0) ? value : -value;
        });
        const int r_contract = ranks[full] - r_a;
        long long b = (r_contract % 2 == 0) ? sum : -sum;
        table.signed_beta_of_contraction[a] = (r_contract % 2 == 0) ? -b : b;
    }
    return table;
}

// P_M as a signed simplex sum: y_{E-A} = signed beta of M/A. The zeta
// transform must reproduce the rank form z_I = r(E) - r(E \ I); that is
// rechecked here because it is the decomposition's own oracle.
inline GenPermRep matroid_polytope_y(const Matroid& m) {
    const int d = m.ground_size();
    const BetaTable table = beta_table(m);
    const std::uint32_t full = (std::uint32_t{1} << d) - 1;
    SetFunction y(d);
    for (std::uint32_t s = 1; s <= full; ++s) {
        y.set_mask(s, Rational(static_cast<long>(table.signed_beta_of_contraction[full & ~s])));
    }
    const SetFunction z = zeta_transform(y);
    const std::vector<int> ranks = m.rank_table();
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (z.at_mask(s) != ranks[full] - ranks[full & ~s]) {
            throw std::logic_error("matroid_polytope_y: zeta transform does not match the rank form");
        }
    }
    return GenPermRep{y};
}

// I_M lifted to the hyperplane in R^{m+1}: the simplex over S ∪ {m+1}
// carries the signed beta of M/(E - S).
inline GenPermRep independent_polytope_y(const Matroid& m) {
    const int d = m.ground_size() + 1;
    check_ground_size(d);
    const BetaTable table = beta_table(m);
    const std::uint32_t full_e = (std::uint32_t{1} << m.ground_size()) - 1;
    const std::uint32_t lift = std::uint32_t{1} << (d - 1);
    SetFunction y(d);
    for (std::uint32_t s = 1; s <= full_e; ++s) {
        y.set_mask(s | lift, Rational(static_cast<long>(table.signed_beta_of_contraction[full_e & ~s])));
    }
    GenPermRep rep{y};
    if (!validate_y(rep).valid) {
        throw std::logic_error("independent_polytope_y: lifted coefficients are not valid");
    }
    return rep;
}

// sum over A of H_{|E-A|-1} * signed beta of M/A; equals the linear
// lattice-count coefficient of P_M, hence nonnegative.
inline Rational beta_inequality(const Matroid& m) {
    const BetaTable table = beta_table(m);
    const std::uint32_t full = (std::uint32_t{1} << m.ground_size()) - 1;
    Rational total = 0;
    for (std::uint32_t a = 0; a < full; ++a) {
        const int rest = std::popcount(full & ~a);
        total += Rational(static_cast<long>(table.signed_beta_of_contraction[a])) * harmonic(rest - 1);
    }
    return total;
}

// Same sum with H_{|E-A|}; the independent-set polytope version.
inline Rational beta_inequality_indep(const Matroid& m) {
    const BetaTable table = beta_table(m);
    const std::uint32_t full = (std::uint32_t{1} << m.ground_size()) - 1;
    Rational total = 0;
    for (std::uint32_t a = 0; a < full; ++a) {
        const int rest = std::popcount(full & ~a);
        total += Rational(static_cast<long>(table.signed_beta_of_contraction[a])) * harmonic(rest);
    }
    return total;
}

inline Matroid uniform_matroid(int r, int n) {
    check_ground_size(n);
    if (r < 0 || r > n) throw std::invalid_argument("uniform matroid needs 0 <= r <= n");
    std::vector<Subset> bases;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) == r) bases.emplace_back(mask, n);
    }
    return Matroid(n, std::move(bases));
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace detail

// Ground set = edges in listed order; bases = maximal spanning forests.
inline Matroid graphic_matroid(int vertices, const std::vector<std::pair<int, int>>& edges) {
    if (vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
    const int m = static_cast<int>(edges.size());
    check_ground_size(m);
    for (const auto& [a, b] : edges) {
        if (a < 1 || a > vertices || b < 1 || b > vertices) {
            throw std::invalid_argument("edge endpoint outside the vertex range");
        }
    }
    const auto forest_size = [&](std::uint32_t mask) {
        detail::UnionFind uf(vertices);
        int size = 0;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            const auto& [a, b] = edges[std::countr_zero(rest)];
            if (uf.unite(a - 1, b - 1)) ++size;
        }
        return size;
    };
    const int rank = forest_size((std::uint32_t{1} << m) - 1);
    std::vector<Subset> bases;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        if (std::popcount(mask) == rank && forest_size(mask) == rank) bases.emplace_back(mask, m);
    }
    return Matroid(m, std::move(bases));
}

inline Matroid direct_sum(const Matroid& left, const Matroid& right) {
    const int m = left.ground_size() + right.ground_size();
    check_ground_size(m);
    std::vector<Subset> bases;
    for (std::uint32_t bl : left.basis_masks()) {
        for (std::uint32_t br : right.basis_masks()) {
            bases.emplace_back(bl | (br << left.ground_size()), m);
        }
    }
    return Matroid(m, std::move(bases));
}

}  // namespace genperm
