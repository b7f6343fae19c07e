// End-to-end acceptance suite. Each criterion prints exactly one
// PASS/FAIL line; the exit code is the number of failures.

#include "genperm/functionals.hpp"
#include "genperm/genperm.hpp"
#include "genperm/lattice.hpp"
#include "genperm/matroid.hpp"
#include "genperm/solid_angle.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace genperm;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string&)> run;
};

SetFunction hypersimplex_y() {
    SetFunction y(3);
    for (std::uint32_t m = 1; m < 8; ++m) {
        if (std::popcount(m) == 2) y.set_mask(m, 1);
    }
    y.set_mask(7, -1);
    return y;
}

SetFunction pi3_y() {
    SetFunction y(3);
    for (std::uint32_t m = 1; m < 8; ++m) {
        if (std::popcount(m) <= 2) y.set_mask(m, 1);
    }
    return y;
}

SetFunction simplex_y(int d) {
    SetFunction y(d);
    y.set(Subset::full_set(d), 1);
    return y;
}

SetFunction random_integer_y(std::mt19937& rng, int d, int lo, int hi) {
    std::uniform_int_distribution<int> coeff(lo, hi);
    SetFunction y(d);
    for (std::uint32_t m = 1; m < y.table_size(); ++m) y.set_mask(m, coeff(rng));
    return y;
}

GenPermRep random_valid_rep(std::mt19937& rng, int d, int lo, int hi) {
    while (true) {
        GenPermRep rep{random_integer_y(rng, d, lo, hi)};
        if (validate_y(rep).valid) return rep;
    }
}

// Sparse valid integer rep: a handful of random non-singleton supports.
GenPermRep random_sparse_valid_rep(std::mt19937& rng, int d, int supports, int lo, int hi) {
    std::uniform_int_distribution<std::uint32_t> mask(1, (std::uint32_t{1} << d) - 1);
    std::uniform_int_distribution<int> coeff(lo, hi);
    while (true) {
        SetFunction y(d);
        for (int s = 0; s < supports; ++s) {
            const std::uint32_t m = mask(rng);
            if (std::popcount(m) >= 2) y.set_mask(m, coeff(rng));
        }
        GenPermRep rep{y};
        if (validate_y(rep).valid) return rep;
    }
}

// Valid rational rep with signed entries: start from a nonnegative
// combination (always valid) and walk coefficients downward while
// validity survives.
GenPermRep random_valid_rational_rep(std::mt19937& rng, int d) {
    std::uniform_int_distribution<std::uint32_t> mask(1, (std::uint32_t{1} << d) - 1);
    std::uniform_int_distribution<int> num(0, 4);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> steps(4, 10);
    SetFunction y(d);
    for (int s = 0; s < d + 3; ++s) {
        const std::uint32_t m = mask(rng);
        y.set_mask(m, y.at_mask(m) + make_rational(num(rng), den(rng)));
    }
    const int walks = steps(rng);
    for (int w = 0; w < walks; ++w) {
        const std::uint32_t m = mask(rng);
        SetFunction candidate = y;
        candidate.set_mask(m, candidate.at_mask(m) - make_rational(num(rng) + 1, den(rng)));
        if (validate_y(GenPermRep{candidate}).valid) y = candidate;
    }
    return GenPermRep{y};
}

std::vector<Matroid> acceptance_corpus(std::string& note) {
    std::vector<Matroid> corpus;
    int uniforms = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int r = 0; r <= n; ++r) {
            corpus.push_back(uniform_matroid(r, n));
            ++uniforms;
        }
    }
    int graphic = 0;
    for (int nv = 2; nv <= 4; ++nv) {
        std::vector<std::pair<int, int>> candidates;
        for (int i = 1; i <= nv; ++i) {
            for (int j = i + 1; j <= nv; ++j) candidates.emplace_back(i, j);
        }
        const std::uint32_t all = (std::uint32_t{1} << candidates.size()) - 1;
        for (std::uint32_t pick = 1; pick <= all; ++pick) {
            std::vector<std::pair<int, int>> edges;
            for (std::uint32_t rest = pick; rest != 0; rest &= rest - 1) {
                edges.push_back(candidates[std::countr_zero(rest)]);
            }
            // connected on the whole vertex set?
            std::vector<int> root(nv);
            for (int i = 0; i < nv; ++i) root[i] = i;
            const std::function<int(int)> find = [&](int v) {
                while (root[v] != v) v = root[v] = root[root[v]];
                return v;
            };
            int components = nv;
            for (const auto& [a, b] : edges) {
                if (find(a - 1) != find(b - 1)) {
                    root[find(a - 1)] = find(b - 1);
                    --components;
                }
            }
            if (components != 1) continue;
            corpus.push_back(graphic_matroid(nv, edges));
            ++graphic;
        }
    }
    corpus.push_back(direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2)));
    corpus.push_back(direct_sum(uniform_matroid(1, 1), uniform_matroid(2, 3)));
    corpus.push_back(direct_sum(uniform_matroid(2, 3), uniform_matroid(1, 2)));
    corpus.push_back(direct_sum(uniform_matroid(1, 3), uniform_matroid(1, 2)));
    std::ostringstream oss;
    oss << uniforms << " uniform + " << graphic << " graphic + 4 direct sums";
    note = oss.str();
    return corpus;
}

bool criterion_validation_equivalence(std::string& detail) {
    // d = 3: every assignment from {-1, 0, 1} on the four non-singleton sets
    const std::uint32_t sets3[4] = {0b011, 0b101, 0b110, 0b111};
    int exhaustive = 0;
    for (int code = 0; code < 81; ++code) {
        int c = code;
        SetFunction y(3);
        for (const std::uint32_t m : sets3) {
            y.set_mask(m, c % 3 - 1);
            c /= 3;
        }
        const bool by_intervals = validate_y_direct(GenPermRep{y}).valid;
        const bool by_supermodularity = validate_z_supermodular(zeta_transform(y)).valid;
        const bool by_library = validate_y(GenPermRep{y}).valid;
        if (by_intervals != by_supermodularity || by_library != by_intervals) {
            detail = "disagreement on the d=3 grid at code " + std::to_string(code);
            return false;
        }
        ++exhaustive;
    }
    // d = 4: random integer vectors
    std::mt19937 rng(1001);
    int agreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const SetFunction y = random_integer_y(rng, 4, -2, 2);
        const bool by_intervals = validate_y_direct(GenPermRep{y}).valid;
        const bool by_supermodularity = validate_z_supermodular(zeta_transform(y)).valid;
        const bool by_library = validate_y(GenPermRep{y}).valid;
        if (by_intervals != by_supermodularity || by_library != by_intervals) {
            detail = "disagreement on random d=4 trial " + std::to_string(trial);
            return false;
        }
        ++agreements;
    }
    detail = std::to_string(exhaustive) + " exhaustive d=3 + " + std::to_string(agreements) +
             " random d=4, exact agreement";
    return true;
}

bool criterion_count_formula(std::string& detail) {
    const auto check_named = [&](const SetFunction& y, long expected, const char* name) {
        const GenPermRep rep{y};
        const Integer formula = count_lattice_points_formula(rep);
        const Integer oracle(
            static_cast<long>(enumerate_lattice_points(zeta_transform(rep.y())).size()));
        if (formula != expected || oracle != expected) {
            detail = std::string(name) + ": formula " + to_string(formula) + ", oracle " +
                     to_string(oracle) + ", expected " + std::to_string(expected);
            return false;
        }
        return true;
    };
    if (!check_named(simplex_y(3), 3, "standard simplex")) return false;
    if (!check_named(pi3_y(), 7, "permutahedron")) return false;
    if (!check_named(hypersimplex_y(), 3, "hypersimplex")) return false;

    std::mt19937 rng(2002);
    int matched = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 3;
        const GenPermRep rep = random_valid_rep(rng, d, -2, 3);
        const Integer formula = count_lattice_points_formula(rep);
        const Integer oracle(
            static_cast<long>(enumerate_lattice_points(zeta_transform(rep.y())).size()));
        if (formula != oracle) {
            detail = "mismatch on random trial " + std::to_string(trial) + " (d=" +
                     std::to_string(d) + "): formula " + to_string(formula) + " vs oracle " +
                     to_string(oracle);
            return false;
        }
        ++matched;
    }
    detail = "3 named instances + " + std::to_string(matched) + " random reps, formula == oracle";
    return true;
}

bool criterion_e1(std::string& detail) {
    std::mt19937 rng(3003);
    int interpolated = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 4;  // 2..5
        const GenPermRep rep = (d <= 4) ? random_valid_rep(rng, d, -2, 2)
                                        : random_sparse_valid_rep(rng, d, 6, -2, 2);
        const EhrhartPolynomial p = ehrhart_polynomial(rep);
        const Rational linear = p.degree() >= 1 ? p.coeffs[1] : Rational(0);
        const Rational functional = e1(rep);
        if (functional != linear) {
            detail = "interpolated linear coefficient differs on trial " + std::to_string(trial);
            return false;
        }
        if (functional < 0) {
            detail = "negative linear coefficient on trial " + std::to_string(trial);
            return false;
        }
        ++interpolated;
    }
    int rational_reps = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 2 + trial % 7;  // 2..8
        const GenPermRep rep = random_valid_rational_rep(rng, d);
        if (e1(rep) < 0) {
            detail = "negative functional value on rational trial " + std::to_string(trial);
            return false;
        }
        ++rational_reps;
    }
    detail = std::to_string(interpolated) + " interpolations matched exactly, " +
             std::to_string(rational_reps) + " rational reps nonnegative";
    return true;
}

bool criterion_certificate(std::string& detail) {
    for (int d = 2; d <= 200; ++d) {
        const PositivityCertificate cert = positivity_certificate(d);
        if (!cert.all_nonnegative) {
            detail = "negative coefficient at d = " + std::to_string(d);
            return false;
        }
        if (!cert.q_identity_verified) {
            detail = "polynomial identity failed at d = " + std::to_string(d);
            return false;
        }
    }
    for (int d = 2; d <= 50; ++d) {
        if (basis_matrix(d).entries * inverse_basis_matrix(d).entries !=
            Matrix::identity(d - 1)) {
            detail = "A*B != I at d = " + std::to_string(d);
            return false;
        }
    }
    detail = "c = B h >= 0 and the row identity hold for d <= 200; A*B = I for d <= 50";
    return true;
}

bool criterion_geometric_rays(std::string& detail) {
    std::mt19937 rng(5005);
    long comparisons = 0;
    for (int d = 3; d <= 5; ++d) {
        for (int trial = 0; trial < 50; ++trial) {
            const GenPermRep rep = random_valid_rep(rng, d, -2, 2);
            const SetFunction z = zeta_transform(rep.y());
            const std::uint32_t full = (std::uint32_t{1} << d) - 1;
            for (int i = 1; i <= d && detail.empty(); ++i) {
                for (int j = i + 1; j <= d && detail.empty(); ++j) {
                    const Subset e = Subset::of({i, j}, d);
                    for_each_submask(full ^ e.bits(), [&](std::uint32_t sub) {
                        if (!detail.empty()) return;
                        const Subset t(e.bits() | sub, d);
                        const Rational by_eval = eval_functional(ray_functional(e, t), rep);
                        const Rational by_face = edge_length_normalized(
                            face_in_direction(z, compatible_direction(e, t)));
                        if (by_eval != by_face) {
                            detail = "mismatch at d=" + std::to_string(d) + " E=" + to_string(e) +
                                     " T=" + to_string(t);
                        }
                        ++comparisons;
                    });
                }
            }
            if (!detail.empty()) return false;
        }
    }
    detail = std::to_string(comparisons) + " (E,T) evaluations equal the face lengths exactly";
    return true;
}

bool criterion_matroids(std::string& detail) {
    std::string corpus_note;
    const std::vector<Matroid> corpus = acceptance_corpus(corpus_note);
    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
        const Matroid& m = corpus[idx];
        const GenPermRep rep = matroid_polytope_y(m);
        const SetFunction z = zeta_transform(rep.y());
        const std::vector<int> ranks = m.rank_table();
        const std::uint32_t full = (std::uint32_t{1} << m.ground_size()) - 1;
        for (std::uint32_t s = 0; s <= full; ++s) {
            if (z.at_mask(s) != ranks[full] - ranks[full & ~s]) {
                detail = "rank form broken for corpus matroid " + std::to_string(idx);
                return false;
            }
        }
        std::vector<std::uint32_t> vertex_masks;
        for (const Point& v : vertices(z)) {
            std::uint32_t mask = 0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] == 1) {
                    mask |= std::uint32_t{1} << i;
                } else if (v[i] != 0) {
                    detail = "non-indicator vertex for corpus matroid " + std::to_string(idx);
                    return false;
                }
            }
            vertex_masks.push_back(mask);
        }
        std::sort(vertex_masks.begin(), vertex_masks.end());
        if (vertex_masks != m.basis_masks()) {
            detail = "vertex set differs from the bases for corpus matroid " + std::to_string(idx);
            return false;
        }
        const Rational base = beta_inequality(m);
        const Rational indep = beta_inequality_indep(m);
        if (base < 0 || indep < 0) {
            detail = "negative beta sum for corpus matroid " + std::to_string(idx);
            return false;
        }
        if (base != e1(rep) || indep != e1(independent_polytope_y(m))) {
            detail = "beta sum does not match the linear coefficient for corpus matroid " +
                     std::to_string(idx);
            return false;
        }
    }
    detail = corpus_note + " all verified";
    return true;
}

bool criterion_solid_angle(std::string& detail) {
    const double expected = 3.0 / std::numbers::pi * std::acos(1.0 / 3.0) - 7.0 / 6.0;
    const double on_example = a1_genperm_d4(negative_a1_example());
    SetFunction y(4);
    y.set(Subset::full_set(4), 1);
    const double on_simplex = a1_genperm_d4(GenPermRep{y});
    if (std::abs(on_example + expected) > 1e-6 || std::abs(on_example + 0.00881298) > 1e-6) {
        detail = "example value " + std::to_string(on_example);
        return false;
    }
    if (std::abs(on_simplex - expected) > 1e-6 || std::abs(on_simplex - 0.00881298) > 1e-6) {
        detail = "simplex value " + std::to_string(on_simplex);
        return false;
    }
    if (!(on_example < 0.0) || !(on_simplex > 0.0)) {
        detail = "sign check failed";
        return false;
    }
    std::ostringstream oss;
    oss << "example " << on_example << ", simplex " << on_simplex << ", both within 1e-6";
    detail = oss.str();
    return true;
}

bool criterion_named_ehrhart(std::string& detail) {
    const EhrhartPolynomial simplex = ehrhart_polynomial(GenPermRep{simplex_y(3)});
    if (simplex.coeffs !=
        std::vector<Rational>{1, make_rational(3, 2), make_rational(1, 2)}) {
        detail = "simplex coefficients wrong";
        return false;
    }
    const SetFunction z = zeta_transform(pi3_y());
    const long counts[3] = {
        static_cast<long>(enumerate_lattice_points(z.scaled(0)).size()),
        static_cast<long>(enumerate_lattice_points(z.scaled(1)).size()),
        static_cast<long>(enumerate_lattice_points(z.scaled(2)).size()),
    };
    if (counts[0] != 1 || counts[1] != 7 || counts[2] != 19) {
        detail = "permutahedron oracle counts are " + std::to_string(counts[0]) + ", " +
                 std::to_string(counts[1]) + ", " + std::to_string(counts[2]);
        return false;
    }
    const EhrhartPolynomial pi = ehrhart_polynomial(GenPermRep{pi3_y()});
    if (pi.coeffs != std::vector<Rational>{1, 3, 3}) {
        detail = "permutahedron coefficients wrong";
        return false;
    }
    detail = "simplex (1, 3/2, 1/2); permutahedron counts 1, 7, 19 and coefficients (1, 3, 3)";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "validation equivalence", criterion_validation_equivalence},
        {2, "lattice-count formula vs oracle", criterion_count_formula},
        {3, "linear coefficient identity and nonnegativity", criterion_e1},
        {4, "positivity certificate", criterion_certificate},
        {5, "geometric ray description", criterion_geometric_rays},
        {6, "matroid decompositions", criterion_matroids},
        {7, "solid-angle example", criterion_solid_angle},
        {8, "named lattice-count polynomials", criterion_named_ehrhart},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " ("
                  << detail << ") [" << seconds << "s]\n";
        if (!ok) ++failures;
    }
    return failures;
}
