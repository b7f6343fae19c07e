// Command-line front end: JSON in, JSON out, humans on stderr.
//
// Exit codes: 0 success, 1 invalid input (including malformed JSON and
// coefficient vectors that fail validation), 2 a falsified mathematical
// invariant such as an oracle mismatch.

#include "genperm/functionals.hpp"
#include "genperm/genperm.hpp"
#include "genperm/json_io.hpp"
#include "genperm/lattice.hpp"
#include "genperm/matroid.hpp"
#include "genperm/solid_angle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace genperm;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitInvariantBroken = 2;

struct InvariantBroken : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int max_ground_size_cap() {
    if (const char* env = std::getenv("GENPERM_MAX_D")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1 && cap <= kMaxGroundSize) return cap;
        } catch (const std::exception&) {
        }
        std::cerr << "note: ignoring unusable GENPERM_MAX_D=" << env << "\n";
    }
    return kMaxGroundSize;
}

void check_cap(int d) {
    const int cap = max_ground_size_cap();
    if (d > cap) {
        throw std::invalid_argument("d = " + std::to_string(d) + " exceeds the cap " +
                                    std::to_string(cap) + " (GENPERM_MAX_D)");
    }
}

// `source` is a file path, or inline JSON when it starts with '{'.
json load_json(const std::string& source) {
    std::string text;
    if (!source.empty() && source.front() == '{') {
        text = source;
    } else {
        std::ifstream in(source);
        if (!in) throw std::invalid_argument("cannot open input file: " + source);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw std::invalid_argument("malformed JSON at line " + std::to_string(line) +
                                    ", column " + std::to_string(column) + ": " + e.what());
    }
}

void emit(const json& out) { std::cout << out.dump() << "\n"; }

json witness_to_json(const ViolationWitness& w) {
    return {{"E", w.E.elements()}, {"T", w.T.elements()}, {"value", to_string(w.value)}};
}

int run_validate(const std::string& input) {
    const GenPermRep rep = rep_from_json(load_json(input));
    check_cap(rep.ground_size());
    const YValidation result = validate_y(rep);
    const bool agreed = equivalence_check(rep.y()) == result.valid;
    json out = {{"valid", result.valid}, {"equivalence_ok", agreed}};
    if (result.witness) out["witness"] = witness_to_json(*result.witness);
    emit(out);
    if (!agreed) throw InvariantBroken("validators disagree");
    if (!result.valid) {
        std::cerr << "not a generalized permutahedron; first violated inequality at E="
                  << to_string(result.witness->E) << ", T=" << to_string(result.witness->T)
                  << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}

int run_transform(const std::string& input, bool to_z) {
    const SetFunction f = set_function_from_json(load_json(input));
    check_cap(f.ground_size());
    emit(set_function_to_json(to_z ? zeta_transform(f) : mobius_transform(f)));
    return kExitOk;
}

int run_vertices(const std::string& input) {
    const GenPermRep rep = rep_from_json(load_json(input));
    check_cap(rep.ground_size());
    if (!validate_y(rep).valid) {
        throw std::invalid_argument("coefficients do not define a generalized permutahedron");
    }
    for (const Point& v : vertices(zeta_transform(rep.y()))) {
        std::cout << point_to_json(v).dump() << "\n";
    }
    return kExitOk;
}

int run_points(const std::string& input, int threads) {
    const GenPermRep rep = rep_from_json(load_json(input));
    check_cap(rep.ground_size());
    if (!validate_y(rep).valid) {
        throw std::invalid_argument("coefficients do not define a generalized permutahedron");
    }
    for (const LatticePoint& p :
         enumerate_lattice_points(zeta_transform(rep.y()), threads)) {
        std::cout << lattice_point_to_json(p).dump() << "\n";
    }
    return kExitOk;
}

int run_count(const std::string& input, bool with_oracle, int threads) {
    const GenPermRep rep = rep_from_json(load_json(input));
    check_cap(rep.ground_size());
    const Integer formula = count_lattice_points_formula(rep);
    json out = {{"formula", integer_to_json(formula)}};
    bool mismatch = false;
    if (with_oracle) {
        const Integer oracle(static_cast<long>(
            enumerate_lattice_points(zeta_transform(rep.y()), threads).size()));
        out["oracle"] = integer_to_json(oracle);
        out["match"] = (formula == oracle);
        mismatch = (formula != oracle);
    }
    emit(out);
    if (mismatch) throw InvariantBroken("count formula disagrees with the brute-force oracle");
    return kExitOk;
}

int run_ehrhart(const std::string& input, int threads) {
    const GenPermRep rep = rep_from_json(load_json(input));
    check_cap(rep.ground_size());
    const EhrhartPolynomial p = ehrhart_polynomial(rep, threads);
    json out = json::array();
    for (const Rational& c : p.coeffs) out.push_back(to_string(c));
    emit(out);
    return kExitOk;
}

int run_e1(const std::string& input) {
    const GenPermRep rep = rep_from_json(load_json(input));
    check_cap(rep.ground_size());
    emit({{"e1", to_string(e1(rep))}});
    return kExitOk;
}

int run_functional_rays(int d) {
    check_ground_size(d);
    check_cap(d);
    json out = json::array();
    const std::uint32_t full = (std::uint32_t{1} << d) - 1;
    for (int i = 1; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            const Subset e = Subset::of({i, j}, d);
            for_each_submask(full ^ e.bits(), [&](std::uint32_t sub) {
                const Subset t(e.bits() | sub, d);
                json entry = {{"E", e.elements()}, {"T", t.elements()}};
                if (d > 2) {
                    entry["direction"] = compatible_direction(e, t);
                }
                out.push_back(entry);
            });
        }
    }
    emit(out);
    return kExitOk;
}

int run_functional_decompose(const std::string& input) {
    const SymmetricFunctional phi = symmetric_functional_from_json(load_json(input));
    const std::vector<Rational> c = decompose_symmetric(phi);
    bool nonneg = true;
    json coeffs = json::array();
    for (const Rational& ck : c) {
        coeffs.push_back(to_string(ck));
        if (ck < 0) nonneg = false;
    }
    emit({{"c", coeffs}, {"nonnegative", nonneg}});
    return kExitOk;
}

int run_functional_certificate(int d) {
    const PositivityCertificate cert = positivity_certificate(d);
    json coeffs = json::array();
    for (const Rational& ck : cert.c) coeffs.push_back(to_string(ck));
    emit({{"c", coeffs},
          {"nonnegative", cert.all_nonnegative},
          {"q_identity", cert.q_identity_verified}});
    if (!cert.all_nonnegative || !cert.q_identity_verified) {
        throw InvariantBroken("positivity certificate failed");
    }
    return kExitOk;
}

int run_matroid_decompose(const std::string& input, bool independent) {
    const Matroid m = matroid_from_json(load_json(input));
    check_cap(m.ground_size() + (independent ? 1 : 0));
    emit(rep_to_json(independent ? independent_polytope_y(m) : matroid_polytope_y(m)));
    return kExitOk;
}

int run_matroid_beta(const std::string& input) {
    const Matroid m = matroid_from_json(load_json(input));
    emit({{"rank", m.rank()}, {"beta", beta(m)}, {"signed_beta", signed_beta(m)}});
    return kExitOk;
}

int run_matroid_inequality(const std::string& input) {
    const Matroid m = matroid_from_json(load_json(input));
    check_cap(m.ground_size() + 1);
    const Rational base = beta_inequality(m);
    const Rational indep = beta_inequality_indep(m);
    const bool base_ok = (base == e1(matroid_polytope_y(m)));
    const bool indep_ok = (indep == e1(independent_polytope_y(m)));
    emit({{"base", to_string(base)},
          {"independent", to_string(indep)},
          {"base_matches_e1", base_ok},
          {"independent_matches_e1", indep_ok}});
    if (!base_ok || !indep_ok) {
        throw InvariantBroken("beta inequality disagrees with the linear coefficient");
    }
    if (base < 0 || indep < 0) {
        throw InvariantBroken("beta inequality is negative");
    }
    return kExitOk;
}

int run_solid_angle_demo() {
    const GenPermRep q = negative_a1_example();
    const double a1 = a1_genperm_d4(q);
    std::cerr << "three-dimensional signed simplex sum in R^4: all six pairs with "
                 "coefficient 1, the full set with coefficient -1\n";
    emit({{"y", rep_to_json(q)["y"]},
          {"valid", true},
          {"a1", a1},
          {"tolerance", 1e-6},
          {"negative", a1 < 0.0}});
    if (!(a1 < 0.0)) throw InvariantBroken("demo linear coefficient failed to be negative");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized permutahedra as signed sums of standard simplices"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --threads appear after a subcommand
    int threads = 1;
    app.add_option("--threads", threads, "parallel workers for point enumeration")
        ->capture_default_str();

    std::function<int()> action;
    std::string input;
    int dim_arg = 0;

    auto* validate = app.add_subcommand("validate", "check a coefficient vector");
    validate->add_option("input", input, "rep JSON (path or inline)")->required();
    validate->callback([&] { action = [&] { return run_validate(input); }; });

    auto* transform = app.add_subcommand("transform", "zeta / Moebius transform");
    bool to_z = false, to_y = false;
    transform->add_flag("--to-z", to_z, "sum over subsets");
    transform->add_flag("--to-y", to_y, "alternating sum over subsets");
    transform->add_option("input", input, "set-function JSON (path or inline)")->required();
    transform->callback([&] {
        if (to_z == to_y) {
            throw CLI::ValidationError("transform", "pass exactly one of --to-z / --to-y");
        }
        action = [&] { return run_transform(input, to_z); };
    });

    auto* verts = app.add_subcommand("vertices", "greedy vertex enumeration");
    verts->add_option("input", input, "rep JSON (path or inline)")->required();
    verts->callback([&] { action = [&] { return run_vertices(input); }; });

    auto* points = app.add_subcommand("points", "list all lattice points");
    points->add_option("input", input, "rep JSON (path or inline)")->required();
    points->callback([&] { action = [&] { return run_points(input, threads); }; });

    auto* count = app.add_subcommand("count", "lattice-point count by the product formula");
    bool with_oracle = false;
    count->add_flag("--oracle", with_oracle, "also run the brute-force oracle and compare");
    count->add_option("input", input, "rep JSON (path or inline)")->required();
    count->callback([&] { action = [&] { return run_count(input, with_oracle, threads); }; });

    auto* ehrhart = app.add_subcommand("ehrhart", "interpolated lattice-count polynomial");
    ehrhart->add_option("input", input, "rep JSON (path or inline)")->required();
    ehrhart->callback([&] { action = [&] { return run_ehrhart(input, threads); }; });

    auto* e1cmd = app.add_subcommand("e1", "linear lattice-count coefficient");
    e1cmd->add_option("input", input, "rep JSON (path or inline)")->required();
    e1cmd->callback([&] { action = [&] { return run_e1(input); }; });

    auto* functional = app.add_subcommand("functional", "positive functional machinery");
    functional->require_subcommand(1);
    auto* rays = functional->add_subcommand("rays", "list the ray functionals and directions");
    rays->add_option("d", dim_arg, "ground-set size")->required();
    rays->callback([&] { action = [&] { return run_functional_rays(dim_arg); }; });
    auto* decompose = functional->add_subcommand("decompose", "coordinates in the f-basis");
    decompose->add_option("input", input, "symmetric functional JSON (path or inline)")->required();
    decompose->callback([&] { action = [&] { return run_functional_decompose(input); }; });
    auto* certificate = functional->add_subcommand("certificate", "nonnegativity certificate");
    certificate->add_option("d", dim_arg, "ground-set size")->required();
    certificate->callback([&] { action = [&] { return run_functional_certificate(dim_arg); }; });

    auto* matroid = app.add_subcommand("matroid", "matroid invariants and decompositions");
    matroid->require_subcommand(1);
    auto* mdec = matroid->add_subcommand("decompose", "polytope as a signed simplex sum");
    bool independent = false;
    mdec->add_flag("--independent", independent, "independent-set polytope instead of the base one");
    mdec->add_option("input", input, "matroid JSON (path or inline)")->required();
    mdec->callback([&] { action = [&] { return run_matroid_decompose(input, independent); }; });
    auto* mbeta = matroid->add_subcommand("beta", "beta invariants");
    mbeta->add_option("input", input, "matroid JSON (path or inline)")->required();
    mbeta->callback([&] { action = [&] { return run_matroid_beta(input); }; });
    auto* mineq = matroid->add_subcommand("inequality", "harmonic-weighted beta sums");
    mineq->add_option("input", input, "matroid JSON (path or inline)")->required();
    mineq->callback([&] { action = [&] { return run_matroid_inequality(input); }; });

    auto* solid = app.add_subcommand("solid-angle", "solid-angle computations");
    solid->require_subcommand(1);
    auto* demo = solid->add_subcommand("demo", "the negative linear coefficient example");
    demo->callback([&] { action = [&] { return run_solid_angle_demo(); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        return action ? action() : kExitInvalidInput;
    } catch (const InvariantBroken& e) {
        std::cerr << "invariant broken: " << e.what() << "\n";
        return kExitInvariantBroken;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInvariantBroken;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
