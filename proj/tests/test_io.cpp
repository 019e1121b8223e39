#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "quiverset/io.hpp"

using namespace quiverset;

TEST_CASE("quiver files round-trip byte-identically") {
  for (const Quiver& q : {Quiver::oriented_cycle(3), Quiver::single_vertex(0),
                          Quiver::single_vertex(2), builtin_psl2z().quiver}) {
    const std::string text = io::write_quiver(q);
    const Quiver back = io::read_quiver(text);
    CHECK(back == q);
    CHECK(io::write_quiver(back) == text);
  }
}

TEST_CASE("setting files round-trip byte-identically") {
  for (const AlgebraSetting& s :
       {builtin_curve(), builtin_psl2z(), builtin_path_algebra(Quiver::oriented_cycle(2)),
        builtin_hereditary_order({{2, 1}, {1, 1, 1}})}) {
    const std::string text = io::write_setting(s);
    const AlgebraSetting back = io::read_setting(text);
    CHECK(back.name == s.name);
    CHECK(back.quiver == s.quiver);
    CHECK(back.alpha == s.alpha);
    CHECK(back.generators == s.generators);
    CHECK(io::write_setting(back) == text);
  }
}

TEST_CASE("type files round-trip byte-identically") {
  const SemisimpleType t{{{{0, 1, 0, 1, 0, 0}, 1}, {{1, 0, 0, 0, 1, 0}, 2}}};
  const std::string text = io::write_type(t);
  CHECK(io::read_type(text) == t);
  CHECK(io::write_type(io::read_type(text)) == text);

  // A bare component list is accepted on input.
  const SemisimpleType bare = io::read_type("[{\"epsilon\": [1], \"mult\": 2}]");
  CHECK(bare == SemisimpleType{{{{1}, 2}}});
}

TEST_CASE("local setting serialization") {
  const LocalQuiverSetting l{Quiver::single_vertex(2), {3}};
  const std::string text = io::write_local_setting(l);
  CHECK(io::read_local_setting(text) == l);
  CHECK(text == "{\n  \"quiver\": {\n    \"vertices\": 1,\n    \"arrows\": [\n      [1, 1, 2]\n"
                "    ]\n  },\n  \"dimvec\": [3]\n}\n");
}

TEST_CASE("sample files are canonical") {
  const std::string dir = QUIVERSET_SAMPLES_DIR;
  for (const char* name : {"quiver_cycle3.json", "quiver_loop.json", "quiver_two_loops.json"}) {
    const std::string text = io::read_file(dir + "/" + name);
    CHECK(io::write_quiver(io::read_quiver(text)) == text);
  }
  for (const char* name : {"setting_psl2z.json", "setting_hereditary_21.json"}) {
    const std::string text = io::read_file(dir + "/" + name);
    CHECK(io::write_setting(io::read_setting(text)) == text);
  }
  for (const char* name : {"type_psl2z.json", "type_curve.json"}) {
    const std::string text = io::read_file(dir + "/" + name);
    CHECK(io::write_type(io::read_type(text)) == text);
  }
}

TEST_CASE("quiver parsing validates and accumulates") {
  CHECK_THROWS_AS(io::read_quiver("{\"arrows\": []}"), std::invalid_argument);
  CHECK_THROWS_AS(io::read_quiver("{\"vertices\": 0, \"arrows\": []}"), std::invalid_argument);
  CHECK_THROWS_AS(io::read_quiver("{\"vertices\": 2, \"arrows\": [[1, 3, 1]]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::read_quiver("{\"vertices\": 2, \"arrows\": [[1, 2, -1]]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::read_quiver("{\"vertices\": 2, \"arrows\": [[1, 2]]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::read_quiver("not json"), nlohmann::json::parse_error);

  // Duplicate pairs accumulate; omitted pairs stay zero.
  const Quiver q = io::read_quiver("{\"vertices\": 2, \"arrows\": [[1, 2, 1], [1, 2, 2]]}");
  CHECK(q.arrows(0, 1) == 3);
  CHECK(q.arrows(1, 0) == 0);
}

TEST_CASE("setting and type parsing validate") {
  CHECK_THROWS_AS(io::read_setting("{\"name\": \"x\", \"quiver\": {\"vertices\": 1, "
                                   "\"arrows\": []}, \"alpha\": [2], \"generators\": "
                                   "[{\"coords\": [1], \"total_dim\": 1}]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::read_type("{\"components\": []}"), std::invalid_argument);
  CHECK_THROWS_AS(io::read_type("{\"components\": [{\"mult\": 1}]}"), std::invalid_argument);
}

TEST_CASE("dot export") {
  CHECK(io::export_dot(Quiver::single_vertex(1)) ==
        "digraph quiver {\n  v1 [label=\"1\"];\n  v1 -> v1;\n}\n");

  const std::string cycle = io::export_dot(Quiver::oriented_cycle(3));
  CHECK(cycle.find("v1 -> v2;") != std::string::npos);
  CHECK(cycle.find("v3 -> v1;") != std::string::npos);

  std::size_t edges = 0;
  const std::string hex = io::export_dot(builtin_psl2z().quiver);
  for (std::size_t pos = hex.find("->"); pos != std::string::npos; pos = hex.find("->", pos + 1))
    ++edges;
  CHECK(edges == 12);

  const DimVector dims{2};
  CHECK(io::export_dot(Quiver::single_vertex(1), &dims) ==
        "digraph quiver {\n  v1 [label=\"1:2\"];\n  v1 -> v1;\n}\n");
}
