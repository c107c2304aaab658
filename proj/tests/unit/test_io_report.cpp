#include <doctest.h>

#include "zagreb/error.hpp"
#include "zagreb/families.hpp"
#include "zagreb/io.hpp"
#include "zagreb/report.hpp"
#include "zagreb/verify.hpp"

#include <json.hpp>

using namespace zagreb;

TEST_CASE("edge-list parsing") {
  const Graph g = parse_edge_list("# a path\n4\n0 1\n\n2 1\n  2   3 \n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(1, 2));
  CHECK(parse_edge_list("1\n").order() == 1);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("-1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 2\n"), ParseError);
}

TEST_CASE("digraph parsing") {
  const Digraph d = parse_digraph("3\n0 > 1\n2>1\n");
  CHECK(d.has_arc(0, 1));
  CHECK(d.has_arc(2, 1));
  CHECK_THROWS_AS(parse_digraph("3\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("3\n0 < 1\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("2\n0 > 0\n"), ParseError);
}

TEST_CASE("round trips") {
  for (const Graph &g : {g1_graph(), u_nm(9, 3), t_nm(7, 2), cycle_graph(6)}) {
    CHECK(parse_edge_list(format_edge_list(g)) == g);
  }
  for (const Digraph &d : extremal_set(6, 3))
    CHECK(parse_digraph(format_digraph(d)) == d);
  CHECK(format_edge_list(parse_edge_list("3\n2 1\n1 0\n")) == "3\n0 1\n1 2\n");
}

TEST_CASE("document streams") {
  const auto docs = split_documents("2\n0 1\n---\n\n---\n3\n0 1\n1 2\n");
  REQUIRE(docs.size() == 2);
  CHECK(parse_edge_list(docs[1]).size() == 2);
  CHECK(join_documents({"a\n", "b\n"}) == "a\n---\nb\n");
  CHECK(split_documents(join_documents(docs)) == docs);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(read_source("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("formats") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("text") == Format::text);
  CHECK(parse_format("edgelist") == Format::edgelist);
  CHECK_THROWS_AS(parse_format("xml"), RangeError);
}

TEST_CASE("certificate serialization") {
  const Certificate c = verify_u42_lemma();
  const std::string json = emit_certificate(c, Format::json);
  CHECK(json == emit_certificate(c, Format::json));
  const auto j = nlohmann::json::parse(json);
  CHECK(j["status"] == "PASS");
  CHECK(j["claim_id"] == "u42");
  CHECK(j["expected_bound"] == 8);
  CHECK(j["observed_max"] == 8);
  CHECK(j["orientations_examined"] == 16);
  CHECK(j["achiever_codes"].size() == 2);
  CHECK_FALSE(j.contains("counterexample"));
  CHECK(json.find("\"claim_id\"") < json.find("\"params\""));
  CHECK(json.find("\"status\"") < json.find("\"graphs_examined\""));

  const std::string csv = emit_certificate(c, Format::csv);
  CHECK(csv.rfind("claim_id,params,", 0) == 0);
  CHECK(csv.find("\nu42,n=4;m=2,8,8,PASS,1,16,4,2,2\n") != std::string::npos);
  CHECK(emit_certificate(c, Format::text).rfind("PASS u42", 0) == 0);
  CHECK_THROWS_AS(emit_certificate(c, Format::edgelist), RangeError);
}

TEST_CASE("failing certificate carries its counterexample") {
  Certificate c;
  c.claim_id = "demo";
  c.expected_bound = 3;
  c.observed_max = 4;
  c.counterexample = format_digraph(extremal_set(4, 2).front());
  c.finalize();
  const auto j = nlohmann::json::parse(emit_certificate(c, Format::json));
  CHECK(j["status"] == "FAIL");
  CHECK(parse_digraph(j["counterexample"].get<std::string>()) == extremal_set(4, 2).front());
}

TEST_CASE("histograms") {
  const auto h = distribution(u_nm(4, 2));
  CHECK(emit_histogram(h, Format::csv) == "5,4\n6,4\n7,4\n8,4\n");
  CHECK(emit_histogram(h, Format::text) == "5: 4\n6: 4\n7: 4\n8: 4\n");
  const auto j = nlohmann::json::parse(emit_histogram(h, Format::json));
  CHECK(j["8"] == 4);
}
