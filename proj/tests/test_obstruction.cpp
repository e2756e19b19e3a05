#include <catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace deljoin;

TEST_CASE("certificate verdicts", "[obstruction]") {
  const auto k5 = certify_nonembeddable(simplex_skeleton(4, 1), 2);
  CHECK(k5.verdict == Verdict::certified_nonembeddable);
  CHECK(*k5.h == 3);
  CHECK(certify_nonembeddable(simplex_skeleton(6, 2), 4).verdict == Verdict::certified_nonembeddable);
  CHECK(certify_nonembeddable(full_simplex(1), 1).verdict == Verdict::no_certificate);
  const auto c4 = certify_nonembeddable(cycle_graph(4), 2);
  CHECK(c4.verdict == Verdict::no_certificate);
  CHECK(*c4.h == 1);
  // K5 embeds in R^3; no certificate there.
  CHECK(certify_nonembeddable(simplex_skeleton(4, 1), 3).verdict == Verdict::no_certificate);
}

TEST_CASE("certificate JSON and cap handling", "[obstruction]") {
  const auto j = certify_nonembeddable(simplex_skeleton(4, 1), 2).to_json();
  CHECK(j["verdict"] == "CERTIFIED_NONEMBEDDABLE");
  CHECK(j["h"] == 3);
  CHECK(j["justification"].size() >= 2);
  const auto saved = cell_cap();
  set_cell_cap(20);
  const auto c = certify_nonembeddable(simplex_skeleton(4, 1), 2);
  set_cell_cap(saved);
  CHECK(c.verdict == Verdict::indeterminate);
  CHECK_FALSE(c.h);
}

TEST_CASE("the +2 law on small complexes", "[obstruction]") {
  for (const auto& k : {discrete_points(1), full_simplex(1), discrete_points(3), simplex_skeleton(2, 1), simplex_skeleton(4, 1)}) {
    const auto r = theorem1_check(k);
    INFO(k.name() << " " << r.to_json().dump());
    CHECK(r.passed());
    const int a = r.h_values["h_deljoin_K"].get<int>();
    CHECK(r.h_values["h_deljoin_K*[3]"].get<int>() == a + 2);
    CHECK(r.h_values["h_z2join"].get<int>() == a + 2);
  }
}

TEST_CASE("join shift", "[obstruction]") {
  const auto r = theorem3a_check(simplex_skeleton(4, 1), simplex_skeleton(4, 1));
  INFO(r.to_json().dump());
  CHECK(r.passed());
  const auto point_edge = theorem3a_check(discrete_points(1), full_simplex(1));
  CHECK(point_edge.passed());
}

TEST_CASE("van Kampen-Flores joins", "[obstruction]") {
  const auto one = gvkf_check({1});
  CHECK(one.passed());
  CHECK(one.h_values["h_deljoin_P"] == 3);
  const auto two = gvkf_check({1, 1});
  INFO(two.to_json().dump());
  CHECK(two.passed());
  CHECK(two.h_values["dim_P"] == 3);
  CHECK(two.h_values["h_deljoin_P"] == 7);
  CHECK_THROWS_AS(gvkf_check({}), std::invalid_argument);
  CHECK_THROWS_AS(gvkf_check({0}), std::invalid_argument);
}

TEST_CASE("links-intersection pipeline", "[obstruction]") {
  const auto r = corollary2_check(join(simplex_skeleton(4, 1), discrete_points(3)), {"L/p0", "L/p1", "L/p2"}, 2);
  INFO(r.to_json().dump());
  CHECK(r.passed());
  CHECK(r.h_values["h_deljoin_K"] == 3);
  CHECK(r.h_values["h_deljoin_P"] == 5);
  REQUIRE(r.hypothesis_flags.size() == 1);
  CHECK(r.hypothesis_flags[0] == "2d>=3k+3>=6 with d=2, k=1: not satisfied");
  CHECK(r.conclusions[0]["P_certified_in_R^(d+2)"] == true);
}

TEST_CASE("metastable flag arithmetic", "[obstruction]") {
  CHECK(detail::metastable_flag(6, 3) == "2d>=3k+3>=6 with d=6, k=3: satisfied");
  CHECK(detail::metastable_flag(4, 2) == "2d>=3k+3>=6 with d=4, k=2: not satisfied");
  CHECK(detail::metastable_flag(3, 1) == "2d>=3k+3>=6 with d=3, k=1: satisfied");
  CHECK(detail::metastable_flag(2, 0) == "2d>=3k+3>=6 with d=2, k=0: not satisfied");
}

TEST_CASE("cone collapse matches the suspension", "[obstruction]") {
  const std::vector<std::pair<SimplicialComplex, std::vector<std::size_t>>> cases{
      {discrete_points(2), {1, 1}},
      {discrete_points(3), {1, 5}},
      {simplex_skeleton(2, 1), {1, 0, 1}},
      {simplex_skeleton(4, 1), {1, 0, 12, 1}},
  };
  for (const auto& [k, expected] : cases) {
    const auto rep = cone_collapse_report(k);
    INFO(k.name() << ": " << rep.detail);
    CHECK(rep.match);
    CHECK(rep.subcomplexes_ok);
    CHECK(rep.quotient_betti == expected);
    CHECK(cone_lemma_check(k).passed());
  }
}

TEST_CASE("report JSON shape", "[obstruction]") {
  const auto j = theorem1_check(discrete_points(3)).to_json();
  for (const char* key : {"check", "inputs", "h_values", "verdict", "hypothesis_flags", "cross_checks", "timings_ms"})
    CHECK(j.contains(key));
  CHECK(j["check"] == "theorem1");
}

TEST_CASE("an exceeded cap makes a check indeterminate", "[obstruction]") {
  const auto saved = cell_cap();
  set_cell_cap(30);
  const auto r = theorem1_check(simplex_skeleton(4, 1));
  set_cell_cap(saved);
  CHECK(r.verdict == "INDETERMINATE");
}
