#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "lachi/error.hpp"
#include "lachi/io.hpp"
#include "lachi/store.hpp"
#include "oracles.hpp"

using namespace lachi;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected lachi::Error");
  return ErrorCode::ParseError;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

EdgeLabeling parse_labeling(const std::string& text, std::size_t q) {
  std::istringstream in(text);
  return read_labeling(in, q);
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "lachi-test-io";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::filesystem::remove(path);
  return path;
}

}  // namespace

TEST_CASE("read_edge_list") {
  const Graph g = parse_graph("# a path\n0 1\n\n1 2   # trailing comment\n  2 3\r\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(2) == Edge{2, 3});

  CHECK(code_of([] { parse_graph("0 1\n1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph("0 1\n1 2 3\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph("0 x\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph("0 -1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph("0 1\n1 0\n"); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { parse_graph("2 2\n"); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { parse_graph("# nothing\n"); }) == ErrorCode::DegenerateFamily);
  CHECK(code_of([] { read_edge_list_file("/nonexistent/graph.edges"); }) == ErrorCode::IoError);
}

TEST_CASE("read_labeling") {
  CHECK(parse_labeling("1 2\n0 1\n", 2) == EdgeLabeling({1, 2}));
  CHECK(parse_labeling("0 3\n1 1\n2 2\n# colors:\n# 0=3\n", 3) == EdgeLabeling({3, 1, 2}));
  CHECK(code_of([] { parse_labeling("0 1\n", 2); }) == ErrorCode::LabelingMismatch);
  CHECK(code_of([] { parse_labeling("0 1\n0 2\n", 2); }) == ErrorCode::LabelingMismatch);
  CHECK(code_of([] { parse_labeling("0 1\n2 2\n", 2); }) == ErrorCode::LabelingMismatch);
  CHECK(code_of([] { parse_labeling("0 1\n1 1\n", 2); }) == ErrorCode::LabelingMismatch);
  CHECK(code_of([] { parse_labeling("0 1\n1 3\n", 2); }) == ErrorCode::LabelingMismatch);
  CHECK(code_of([] { parse_labeling("0 one\n", 1); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_labeling("", kMaxFileEdges + 1); }) == ErrorCode::TooLarge);
}

TEST_CASE("edge list and labeling round-trip") {
  std::mt19937 rng(41);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 3 + rng() % 10;
    const auto pairs = oracle::random_connected(rng, n, n + rng() % 6);
    const Graph g = Graph::from_edge_list(pairs, "random");
    std::vector<Label> labels(g.edge_count());
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    const EdgeLabeling f(labels);

    std::stringstream gs;
    write_edge_list(gs, g);
    const Graph back = read_edge_list(gs);
    CHECK(std::ranges::equal(back.edges(), g.edges()));
    CHECK(back.vertex_count() == g.vertex_count());

    std::stringstream ls;
    write_labeling(ls, g, f);
    CHECK(read_labeling(ls, g.edge_count()) == f);
  }
}

TEST_CASE("files: the stem names the graph") {
  const auto path = scratch("wheel4.edges");
  {
    std::ofstream out(path);
    write_edge_list(out, build_wheel(4));
  }
  const Graph g = read_edge_list_file(path);
  CHECK(g.name() == "wheel4");
  const Graph w4 = build_wheel(4);
  CHECK(std::ranges::equal(g.edges(), w4.edges()));
}

TEST_CASE("profile JSON") {
  const ColorProfile p = extract_profile(build_wheel(4), EdgeLabeling({1, 6, 5, 8, 7, 2, 4, 3}));
  const Json j = to_json(p);
  CHECK(j["e"] == 8);
  CHECK(j["t"] == 3);
  CHECK(j["classes"][2]["color"] == 20);
  CHECK(j["classes"][2]["members"] == Json::array({0}));

  const ColorProfile back = profile_from_json(j);
  CHECK(back.r == p.r);
  CHECK(back.b == p.b);
  REQUIRE(back.t() == p.t());
  for (std::size_t i = 1; i <= p.t(); ++i) {
    CHECK(back.c(i) == p.c(i));
    CHECK(back.n(i) == p.n(i));
    CHECK(back.cls(i).members == p.cls(i).members);
  }

  // Minimal hand-written profile: members, pendants, b and t are optional.
  const Json minimal = Json::parse(R"({"e": 8, "r": 3, "classes": [
      {"color": 11, "size": 2}, {"color": 15, "size": 2}, {"color": 20, "size": 1}]})");
  CHECK(profile_from_json(minimal).t() == 3);

  Json bad = minimal;
  bad["classes"][2]["color"] = 19;
  CHECK(code_of([&] { profile_from_json(bad); }) == ErrorCode::InvalidProfile);
  bad = minimal;
  bad["t"] = 4;
  CHECK(code_of([&] { profile_from_json(bad); }) == ErrorCode::InvalidProfile);
  bad = minimal;
  bad.erase("e");
  CHECK(code_of([&] { profile_from_json(bad); }) == ErrorCode::ParseError);
  bad = minimal;
  bad["classes"][0]["color"] = "eleven";
  CHECK(code_of([&] { profile_from_json(bad); }) == ErrorCode::ParseError);
}

TEST_CASE("prediction and report JSON") {
  ColorProfile p;
  p.edge_count = 8;
  p.r = 3;
  p.classes = {{11, 2, 0, {}}, {15, 2, 0, {}}, {20, 1, 0, {}}};
  const Json b = to_json(predict(p, 3, 12));
  CHECK(b["applicable"] == true);
  CHECK(b["exact"] == 13);
  CHECK(b["theorem_case"] == "addpendant/e<c1");
  const Json n = to_json(predict(p, 1, 3));
  CHECK(n["applicable"] == false);
  CHECK(n["exact"].is_null());
  CHECK_FALSE(n["failed_preconditions"].empty());
}

TEST_CASE("instance_hash") {
  const Graph a = build_wheel(4);
  CHECK(instance_hash(a, "solve") == instance_hash(build_wheel(4), "solve"));
  CHECK(instance_hash(a, "solve").size() == 16);
  CHECK(instance_hash(a, "solve") != instance_hash(a, "verify"));
  CHECK(instance_hash(build_path(4), "solve") != instance_hash(build_star(3), "solve"));
  // Same graph, different edge order: different labeling semantics.
  const Graph p = Graph::from_edge_list({{0, 1}, {1, 2}});
  const Graph q = Graph::from_edge_list({{1, 2}, {0, 1}});
  CHECK(instance_hash(p, "solve") != instance_hash(q, "solve"));
}

TEST_CASE("ResultsStore audit") {
  const auto path = scratch("store.jsonl");
  ResultsStore store(path);
  CHECK_FALSE(store.lookup("k1"));

  const auto first = store.append("k1", "solve", Json{{"chi_la", 3}}, Json{{"nodes", 10}});
  CHECK_FALSE(first.had_previous);
  CHECK(first.matches);

  const auto again = store.append("k1", "solve", Json{{"chi_la", 3}}, Json{{"nodes", 99}});
  CHECK(again.had_previous);
  CHECK(again.matches);

  const auto drift = store.append("k1", "solve", Json{{"chi_la", 4}}, Json{});
  CHECK(drift.had_previous);
  CHECK_FALSE(drift.matches);

  REQUIRE(store.lookup("k1"));
  CHECK((*store.lookup("k1"))["chi_la"] == 3);

  // Reopening reads the same file; junk lines are ignored.
  {
    std::ofstream out(path, std::ios::app);
    out << "not json\n";
  }
  ResultsStore reopened(path);
  CHECK((*reopened.lookup("k1"))["chi_la"] == 3);
  CHECK_FALSE(reopened.lookup("k2"));
}
