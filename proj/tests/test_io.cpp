#include <random>
#include <sstream>

#include "doctest.h"
#include "lcq/families.hpp"
#include "lcq/io.hpp"
#include "lcq/qasst_ops.hpp"
#include "support/oracle.hpp"

using namespace lcq;

TEST_CASE("graph JSON round-trip") {
  const Graph g = cycle_graph(5);
  const Json j = graph_to_json(g);
  CHECK(j.at("n") == 5);
  CHECK(j.at("edges").size() == 5);
  CHECK(graph_from_json(j) == g);
  CHECK(graph_from_json(parse_json(j.dump())) == g);
}

TEST_CASE("malformed graph JSON") {
  CHECK_THROWS_AS(parse_json("{\"n\": 3,"), ParseError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"edges": []})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n": 3, "edges": [[1, 4]]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n": 3, "edges": [[1, 1]]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n": 3, "edges": [[1, 2, 3]]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n": "three", "edges": []})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n": 99, "edges": []})")), ParseError);
}

TEST_CASE("QASST JSON round-trip") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    const int n = oracle::uniform(rng, 1, 12);
    const Graph g = i % 2 ? random_dh(n, rng()).graph : oracle::random_connected_graph(rng, n);
    const Qasst t = compute_qasst(g);
    const Json j = qasst_to_json(t);
    const Qasst back = qasst_from_json(parse_json(j.dump()));
    REQUIRE(back == t);
    CHECK(qasst_to_json(back) == j);
    CHECK(reconstruct(back) == g);
  }
}

TEST_CASE("QASST JSON schema") {
  const Json j = qasst_to_json(compute_qasst(complete_bipartite(2, 2)));
  CHECK(j.at("n") == 4);
  REQUIRE(j.at("quotients").size() == 2);
  const Json& q0 = j.at("quotients")[0];
  CHECK(q0.at("leaf_nodes") == Json::array({1, 2}));
  CHECK(q0.at("split_nodes") == Json::parse(R"([{"i": 0, "j": 1}])"));
  CHECK(j.at("tree_edges") == Json::parse(R"([[{"i": 0, "j": 1}, {"i": 1, "j": 0}]])"));
}

TEST_CASE("malformed QASST JSON") {
  Json j = qasst_to_json(compute_qasst(complete_bipartite(2, 2)));
  Json bad_owner = j;
  bad_owner["quotients"][0]["split_nodes"][0]["i"] = 1;
  CHECK_THROWS_AS(qasst_from_json(bad_owner), ParseError);
  Json unpaired = j;
  unpaired["quotients"][1]["split_nodes"] = Json::array();
  unpaired["quotients"][1]["edges"] = Json::parse("[[3, 4]]");
  CHECK_THROWS_AS(qasst_from_json(unpaired), ParseError);
  Json missing_leaf = j;
  missing_leaf["n"] = 5;
  CHECK_THROWS_AS(qasst_from_json(missing_leaf), ParseError);
  Json huge = j;
  huge["n"] = 1000;
  CHECK_THROWS_AS(qasst_from_json(huge), ParseError);
  CHECK_THROWS_AS(qasst_from_json(Json::parse(R"({"quotients": []})")), ParseError);
  Json stray = j;
  stray["quotients"][0]["edges"].push_back(Json::array({1, 9}));
  CHECK_THROWS_AS(qasst_from_json(stray), ParseError);
}

TEST_CASE("sequence JSON") {
  const LcSequence f{{1, 3, 1}};
  CHECK(sequence_from_json(sequence_to_json(f)) == f);
  CHECK(sequence_to_json(f).dump() == R"({"steps":[1,3,1]})");
  CHECK_THROWS_AS(sequence_from_json(Json::parse(R"({"steps": "1,3"})")), ParseError);
}

TEST_CASE("DOT output") {
  const std::string g = graph_to_dot(path_graph(3));
  CHECK(g.find("graph G {") == 0);
  CHECK(g.find("1 -- 2;") != std::string::npos);
  CHECK(g.find("2 -- 3;") != std::string::npos);

  const std::string t = qasst_to_dot(compute_qasst(complete_bipartite(2, 2)));
  CHECK(t.find("subgraph cluster_0") != std::string::npos);
  CHECK(t.find("subgraph cluster_1") != std::string::npos);
  CHECK(t.find("shape=box") != std::string::npos);
  CHECK(t.find("s0_1 -- s1_0 [style=bold, color=red]") != std::string::npos);
}

TEST_CASE("reading from a stream") {
  std::istringstream in(R"({"n": 2, "edges": [[1, 2]]})");
  CHECK(graph_from_json(read_json(in)) == complete_graph(2));
}
