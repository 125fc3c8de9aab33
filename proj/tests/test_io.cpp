#include <doctest.h>

#include "dejonq/checks.hpp"
#include "dejonq/graph_io.hpp"

using namespace dejonq;

TEST_SUITE("io") {
  TEST_CASE("graph round trip") {
    DualGraph fixture = chain_fixture(4, {2, 2, 2, 1}, 1);
    Json doc = graph_to_json(fixture);
    DualGraph back = graph_from_json(doc);
    CHECK(graph_to_json(back) == doc);
    CHECK(back.vertices().size() == fixture.vertices().size());
    CHECK(back.total_degree() == fixture.total_degree());
    CHECK(back.markings().size() == fixture.markings().size());
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS((void)graph_from_string("{ not json"), parse_error);
    CHECK_THROWS_AS((void)graph_from_string("[]"), parse_error);
    CHECK_THROWS_AS((void)graph_from_string(R"({"vertices": [{"id": 0}]})"),
                    parse_error);
    // Edge referencing a missing vertex.
    CHECK_THROWS_AS((void)graph_from_string(
                        R"({"vertices": [{"id": 0, "genus": 1}],
                            "edges": [{"id": 0, "u": 0, "v": 1}]})"),
                    parse_error);
    // Bad multidegree key.
    CHECK_THROWS_AS((void)graph_from_string(
                        R"({"vertices": [{"id": 0, "genus": 1}],
                            "multidegree": {"x": 1}})"),
                    parse_error);
  }

  TEST_CASE("markings default to delta 1") {
    DualGraph g = graph_from_string(
        R"({"vertices": [{"id": 0, "genus": 2}],
            "markings": [{"vertex": 0, "a": 3}]})");
    CHECK(g.markings().front().delta == 1);
    CHECK(g.marking_weight(0) == 3);
  }

  TEST_CASE("solution serialization carries status and certificate") {
    DualGraph feasible({{0, 1}, {1, 1}}, {{0, 0, 1}}, {{0, 3, 1}},
                       {{0, 1}, {1, 2}});
    Json ok = solution_to_json(solve_twists(feasible));
    CHECK(ok["status"] == "feasible");
    CHECK(ok["certificate"].is_null());
    CHECK(ok["particular"].size() == 1);

    DualGraph imbalanced({{0, 1}, {1, 1}}, {{0, 0, 1}}, {{0, 2, 1}},
                         {{0, 1}, {1, 2}});
    Json bad = solution_to_json(solve_twists(imbalanced));
    CHECK(bad["status"] == "infeasible");
    CHECK(bad["certificate"]["kind"] == "imbalance");
  }

  TEST_CASE("serialization is deterministic") {
    DualGraph fixture = chain_fixture(5, {3, 2, 1, 1}, 0);
    std::string first = solution_to_json(solve_twists(fixture)).dump(2);
    std::string second = solution_to_json(solve_twists(fixture)).dump(2);
    CHECK(first == second);
  }
}
