#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genperm/json_io.hpp"

using namespace genperm;

TEST_CASE("set functions parse from entries with defaults") {
    const json j = json::parse(R"({"d": 3, "entries": [
        {"set": [1, 2], "value": "3/2"},
        {"set": [3], "value": -2}
    ]})");
    const SetFunction f = set_function_from_json(j);
    CHECK(f.ground_size() == 3);
    CHECK(f[Subset::of({1, 2}, 3)] == make_rational(3, 2));
    CHECK(f[Subset::of({3}, 3)] == -2);
    CHECK(f[Subset::full_set(3)] == 0);  // omitted
}

TEST_CASE("set function round trip") {
    SetFunction f(4);
    f.set(Subset::of({2, 4}, 4), make_rational(-7, 3));
    f.set(Subset::of({1}, 4), 5);
    CHECK(set_function_from_json(set_function_to_json(f)) == f);
}

TEST_CASE("rep round trip and parsing") {
    const json j = json::parse(R"({"d": 3, "y": [
        {"set": [1, 2], "value": 1},
        {"set": [1, 2, 3], "value": "-1"}
    ]})");
    const GenPermRep rep = rep_from_json(j);
    CHECK(rep.y()[Subset::of({1, 2}, 3)] == 1);
    CHECK(rep.y()[Subset::full_set(3)] == -1);
    CHECK(rep_from_json(rep_to_json(rep)) == rep);
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(set_function_from_json(json::parse(R"({"entries": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(set_function_from_json(json::parse(R"({"d": 25, "entries": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        set_function_from_json(json::parse(R"({"d": 3, "entries": [{"set": [2, 1], "value": 1}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        set_function_from_json(json::parse(R"({"d": 3, "entries": [{"set": [1, 1], "value": 1}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        set_function_from_json(json::parse(R"({"d": 3, "entries": [{"set": [4], "value": 1}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        set_function_from_json(json::parse(R"({"d": 3, "entries": [{"set": [1], "value": 1.5}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(set_function_from_json(json::parse(
                        R"({"d": 2, "entries": [{"set": [1], "value": 1}, {"set": [1], "value": 2}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(rep_from_json(json::parse(R"({"d": 2})")), std::invalid_argument);
}

TEST_CASE("symmetric functionals") {
    const json j = json::parse(R"({"d": 3, "values": ["1", "3/2"]})");
    const SymmetricFunctional phi = symmetric_functional_from_json(j);
    CHECK(phi.values == std::vector<Rational>{1, make_rational(3, 2)});
    CHECK(symmetric_functional_from_json(symmetric_functional_to_json(phi)) == phi);
    CHECK_THROWS_AS(symmetric_functional_from_json(json::parse(R"({"d": 3, "values": ["1"]})")),
                    std::invalid_argument);
}

TEST_CASE("matroids from bases and from graphs") {
    const json by_bases = json::parse(R"({"ground": 3, "bases": [[1,2],[1,3],[2,3]]})");
    const Matroid m = matroid_from_json(by_bases);
    CHECK(m == uniform_matroid(2, 3));
    CHECK(matroid_from_json(matroid_to_json(m)) == m);

    const json by_graph =
        json::parse(R"({"graph": {"vertices": 3, "edges": [[1,2],[2,3],[1,3]]}})");
    CHECK(matroid_from_json(by_graph) == uniform_matroid(2, 3));

    CHECK_THROWS_AS(matroid_from_json(json::parse(R"({"ground": 3, "bases": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(matroid_from_json(json::parse(R"({"ground": 4, "bases": [[1,2],[3,4]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        matroid_from_json(json::parse(R"({"graph": {"vertices": 2, "edges": [[1, 5]]}})")),
        std::invalid_argument);
}

TEST_CASE("point serialization") {
    LatticePoint p{{Integer(-1), Integer(0), Integer(3)}};
    CHECK(lattice_point_to_json(p).dump() == "[-1,0,3]");
    Point q{make_rational(1, 2), Rational(2)};
    CHECK(point_to_json(q).dump() == "[\"1/2\",2]");
    CHECK(integer_to_json(Integer("123456789012345678901234567890")).dump() ==
          "\"123456789012345678901234567890\"");
}
