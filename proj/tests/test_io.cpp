#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracle.hpp"

using namespace deljoin;

TEST_CASE("complex JSON round trip is byte stable", "[io]") {
  const auto k = join(simplex_skeleton(2, 1), discrete_points(2));
  const auto text = to_json_text(k);
  const auto back = from_json_text(text);
  REQUIRE(std::holds_alternative<SimplicialComplex>(back));
  CHECK(std::get<SimplicialComplex>(back) == k);
  CHECK(to_json_text(std::get<SimplicialComplex>(back)) == text);
}

TEST_CASE("Z2 complex JSON round trip", "[io]") {
  const auto x = deleted_join(simplex_skeleton(2, 1));
  const auto text = to_json_text(x);
  CHECK(text.find("\"involution\"") != std::string::npos);
  const auto back = from_json_text(text);
  REQUIRE(std::holds_alternative<Z2Complex>(back));
  CHECK(std::get<Z2Complex>(back) == x);
  CHECK(to_json_text(std::get<Z2Complex>(back)) == text);
}

TEST_CASE("cell complexes export but do not import", "[io]") {
  const auto text = to_json_text(deleted_product(simplex_skeleton(2, 1)));
  CHECK(text.find("\"cells\"") != std::string::npos);
  CHECK(nlohmann::json::parse(text)["cells"].size() == 2);
  CHECK_THROWS_AS(from_json_text(text), SpecError);
}

TEST_CASE("malformed documents", "[io]") {
  CHECK_THROWS_AS(from_json_text("{"), SpecError);
  CHECK_THROWS_AS(from_json_text("[]"), SpecError);
  CHECK_THROWS_AS(from_json_text(R"({"vertices": ["a"]})"), SpecError);
  CHECK_THROWS_AS(from_json_text(R"({"vertices": ["a"], "facets": [[]]})"), SpecError);
  CHECK_THROWS_AS(from_json_text(R"({"vertices": ["a"], "facets": [["b"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(from_json_text(R"({"vertices": ["a", "b"], "facets": [["a", "b"]], "involution": [["a", "b"]]})"),
                  FreenessError);
}

TEST_CASE("inline specifiers", "[io]") {
  CHECK(parse_complex("skeleton:4:1").f_vector() == std::vector<std::size_t>{5, 10});
  CHECK(parse_complex("simplex:2").f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(parse_complex("boundary:2") == simplex_skeleton(2, 1));
  CHECK(parse_complex("points:3") == discrete_points(3));
  CHECK(parse_complex("point").vertex_count() == 1);
  CHECK(parse_complex("edge").f_vector() == std::vector<std::size_t>{2, 1});
  CHECK(parse_complex("cycle:4") == cycle_graph(4));
  CHECK(parse_complex("cone(points:2)").f_vector() == std::vector<std::size_t>{3, 2});
  CHECK(parse_complex("join(skeleton:2:1,points:3)") == join(simplex_skeleton(2, 1), discrete_points(3)));
  CHECK(parse_z2("deljoin(points:3)") == deleted_join(discrete_points(3)));
  CHECK(parse_z2("crosspoly:2") == cross_polytope_boundary(2));
  // join of two Z2-complexes keeps the involution.
  CHECK(parse_z2("join(crosspoly:0,crosspoly:0)") == z2_join(cross_polytope_boundary(0), cross_polytope_boundary(0)));
  CHECK(std::holds_alternative<CellComplex>(parse_object("delprod(skeleton:2:1)")));
  CHECK_THROWS_AS(parse_z2("points:3"), SpecError);
  CHECK_THROWS_AS(parse_complex("skeleton:4"), SpecError);
  CHECK_THROWS_AS(parse_complex("skeleton:a:1"), SpecError);
  CHECK_THROWS_AS(parse_complex("frob(points:1)"), SpecError);
  CHECK_THROWS_AS(parse_complex("/nonexistent/file.json"), SpecError);
}

TEST_CASE("file specifiers", "[io]") {
  const auto path = std::filesystem::temp_directory_path() / "deljoin_io_test.json";
  {
    std::ofstream f(path);
    f << to_json_text(deleted_join(discrete_points(3)));
  }
  CHECK(cohomological_index(parse_z2(path.string())) == 1);
  CHECK(parse_complex(path.string()).f_vector() == std::vector<std::size_t>{6, 6});
  std::filesystem::remove(path);
}
