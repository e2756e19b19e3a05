// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <deljoin/deljoin.hpp>

#include "oracle.hpp"

using namespace deljoin;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

int failed = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  Stopwatch sw;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double s = sw.elapsed_ms() / 1000.0;
  o.expect(s <= limit_s, "took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s");
  std::printf("criterion %2d %s  %s (%.2f s)\n", n, o.pass ? "PASS" : "FAIL", title.c_str(), s);
  for (const auto& f : o.failures) std::printf("              - %s\n", f.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failed;
}

// Structural properties of one free Z2-complex.
void check_z2(Outcome& o, const Z2Complex& x) {
  const std::string at = " [" + x.name() + "]";
  const auto& k = x.complex();
  o.expect(!k.first_unclosed(), "face closure" + at);
  bool free_ok = true;
  k.for_each_simplex([&](const Simplex& s) { free_ok = free_ok && x.apply(s) != s && k.contains(x.apply(s)); });
  o.expect(free_ok, "freeness" + at);

  const auto cc = chain_complex(x);
  o.expect(!cc.first_nonzero_square(), "boundary squared" + at);
  const auto b = cc.betti();
  o.expect(euler_of_betti(b) == cc.euler_characteristic(), "Euler/Betti identity" + at);

  const auto q = quotient(x);
  const auto qc = chain_complex(q);
  o.expect(!qc.first_nonzero_square(), "quotient boundary squared" + at);
  o.expect(cc.euler_characteristic() == 2 * qc.euler_characteristic(), "chi(X) = 2 chi(X/T)" + at);
  o.expect(euler_of_betti(qc.betti()) == qc.euler_characteristic(), "quotient Euler/Betti identity" + at);

  const auto cov = cover_class(x, q);
  if (q.dim() >= 1) {
    BitVector w(q.cells(1).size());
    for (std::size_t i = 0; i < w.size(); ++i) w.set(i, cov.w[i] != 0);
    if (q.dim() >= 2) o.expect(!qc.boundary[2].transpose().apply(w).any(), "delta w = 0" + at);
  }

  // full_ladder also throws if the ladder is not monotone.
  const auto r = cohomological_index_detail(x, true);
  o.expect(r.h >= 0 && r.h <= x.dim(), "h <= dim" + at);
  if (b.front() == 1) o.expect(r.h >= 1, "h >= 1 when connected" + at);
  bool monotone = true;
  for (std::size_t n = 1; n < r.ladder.size(); ++n) monotone = monotone && (!r.ladder[n] || r.ladder[n - 1]);
  o.expect(monotone, "cup ladder monotone" + at);
}

}  // namespace

int main() {
  criterion(1, "hexagon identity: deljoin([3]) = C6, Betti (1,1), h = 1", 1.0, [](Outcome& o) {
    const auto x = deleted_join(discrete_points(3));
    o.expect(x.complex().f_vector() == std::vector<std::size_t>{6, 6}, "f-vector (6,6)");
    const auto iso = isomorphic(x.complex(), cycle_graph(6));
    o.expect(iso.isomorphic() && iso.witness.size() == 6, "isomorphic to C6 with witness");
    o.expect(betti(x) == std::vector<std::size_t>{1, 1}, "Betti (1,1)");
    o.expect(cohomological_index(x) == 1, "h = 1");
  });

  for (int k = 1; k <= 3; ++k) {
    const double limit = k <= 2 ? 10.0 : 300.0;
    criterion(2, "sphere suite k=" + std::to_string(k) + ": deljoin(skeleton(" + std::to_string(2 * k + 2) + "," +
                     std::to_string(k) + ")) tight S^" + std::to_string(2 * k + 1),
              limit, [k](Outcome& o) {
                const auto c = homology_sphere_certificate(deleted_join(simplex_skeleton(2 * k + 2, k)), 2 * k + 1);
                o.expect(c.sphere, "homology sphere");
                o.expect(c.tight, "h = " + std::to_string(2 * k + 1));
              });
  }

  criterion(3, "certificate verdicts on the four reference inputs", 60.0, [](Outcome& o) {
    o.expect(certify_nonembeddable(simplex_skeleton(6, 2), 4).verdict == Verdict::certified_nonembeddable,
             "skeleton(6,2) in R^4 certified");
    o.expect(certify_nonembeddable(simplex_skeleton(8, 3), 6).verdict == Verdict::certified_nonembeddable,
             "skeleton(8,3) in R^6 certified");
    o.expect(certify_nonembeddable(full_simplex(1), 1).verdict == Verdict::no_certificate, "edge in R^1 no certificate");
    o.expect(certify_nonembeddable(cycle_graph(4), 2).verdict == Verdict::no_certificate, "C4 in R^2 no certificate");
  });

  criterion(4, "+2 law h(deljoin(K*[3])) = h(deljoin(K)) + 2 on the corpus, both routes", 600.0, [](Outcome& o) {
    for (const auto& k : theorem1_corpus()) {
      const auto r = theorem1_check(k);
      const int h1 = r.h_values.value("h_deljoin_K", -1);
      const int h2 = r.h_values.value("h_deljoin_K*[3]", -1);
      const int hz = r.h_values.value("h_z2join", -1);
      o.expect(r.passed() && h2 == h1 + 2 && hz == h2,
               k.name() + ": " + std::to_string(h1) + " -> " + std::to_string(h2) + " / " + std::to_string(hz));
    }
  });

  criterion(5, "join decomposition: explicit equivariant isomorphism on corpus pairs", 120.0, [](Outcome& o) {
    const std::vector<std::pair<SimplicialComplex, SimplicialComplex>> pairs{
        {simplex_skeleton(4, 1), discrete_points(3)}, {full_simplex(1), full_simplex(1)},
        {discrete_points(1), discrete_points(1)},     {simplex_skeleton(2, 1), discrete_points(3)},
        {discrete_points(3), full_simplex(1)},        {simplex_skeleton(6, 2), discrete_points(3)}};
    int passed = 0;
    for (const auto& [k, l] : pairs) {
      const auto r = verify_join_decomposition(k, l);
      o.expect(r.pass, k.name() + " * " + l.name() + ": " + r.detail);
      passed += r.pass;
    }
    o.expect(passed >= 5, "at least 5 pairs");
  });

  criterion(6, "cone collapse matches suspension Betti numbers", 60.0, [](Outcome& o) {
    for (const auto& k : {discrete_points(2), discrete_points(3), simplex_skeleton(2, 1), simplex_skeleton(4, 1)}) {
      const auto rep = cone_collapse_report(k);
      o.expect(rep.match && rep.subcomplexes_ok, k.name() + ": " + rep.detail);
    }
  });

  criterion(7, "gvkf [1,1]: dim P = 3, h = 7, certified in R^6", 300.0, [](Outcome& o) {
    const auto r = gvkf_check({1, 1});
    o.expect(r.h_values.value("dim_P", -1) == 3, "dim P = 3");
    o.expect(r.h_values.value("h_deljoin_P", -1) == 7, "h = 7");
    o.expect(!r.conclusions.empty() && r.conclusions[0]["verdict"] == "CERTIFIED_NONEMBEDDABLE", "certified in R^6");
    o.expect(r.passed(), "report PASS");
  });

  criterion(8, "links pipeline on join(skeleton(6,2),[3]) at d = 4", 120.0, [](Outcome& o) {
    const auto p = join(simplex_skeleton(6, 2), discrete_points(3));
    const auto li = links_intersection(p, {"L/p0", "L/p1", "L/p2"});
    o.expect(isomorphic(li.complex, simplex_skeleton(6, 2)).isomorphic(), "extracts skeleton(6,2)");
    const auto r = corollary2_check(p, {"L/p0", "L/p1", "L/p2"}, 4);
    o.expect(r.passed(), "report PASS (containment, index bound)");
    o.expect(!r.conclusions.empty() && r.conclusions[0]["verdict"] == "CERTIFIED_NONEMBEDDABLE", "certified");
    const bool flag_ok = r.hypothesis_flags.size() == 1 && r.hypothesis_flags[0].ends_with(": satisfied");
    o.expect(flag_ok, "flags 2d >= 3k+3 satisfied; reported: " +
                          (r.hypothesis_flags.empty() ? std::string("none") : r.hypothesis_flags[0]));
  });

  criterion(9, "structural properties on the corpus and 100 random complexes", 300.0, [](Outcome& o) {
    std::vector<Z2Complex> objects;
    for (const auto& k : theorem1_corpus()) {
      objects.push_back(deleted_join(k));
      objects.push_back(deleted_join(join(k, discrete_points(3))));
    }
    for (int k = 1; k <= 2; ++k) objects.push_back(deleted_join(simplex_skeleton(2 * k + 2, k)));
    for (int n = 0; n <= 3; ++n) objects.push_back(cross_polytope_boundary(n));
    objects.push_back(z2_join(deleted_join(simplex_skeleton(4, 1)), deleted_join(simplex_skeleton(4, 1))));
    std::mt19937 rng(20261014);
    std::vector<SimplicialComplex> randoms;
    for (int i = 0; i < 100; ++i) randoms.push_back(oracle::random_complex(rng, 8, "random" + std::to_string(i)));
    for (const auto& k : randoms) objects.push_back(deleted_join(k));
    for (const auto& x : objects) check_z2(o, x);

    // Cellular deleted products: boundary squared and Euler/Betti.
    for (const auto& k : {simplex_skeleton(2, 1), simplex_skeleton(4, 1), simplex_skeleton(6, 2)}) {
      const auto cc = chain_complex(deleted_product(k));
      o.expect(!cc.first_nonzero_square(), "delprod boundary squared [" + k.name() + "]");
      o.expect(euler_of_betti(cc.betti()) == cc.euler_characteristic(), "delprod Euler/Betti [" + k.name() + "]");
    }
    // Independent oracle for the index on the random complexes with <= 6 vertices.
    for (const auto& k : randoms)
      if (k.vertex_count() <= 6) {
        const auto x = deleted_join(k);
        o.expect(oracle::index_by_pairing(x).h == cohomological_index(x), "pairing oracle [" + k.name() + "]");
      }
  });

  criterion(10, "core suite JSON identical at 1 and N threads (timings excluded)", 120.0, [](Outcome& o) {
    const unsigned saved = thread_count();
    set_thread_count(1);
    const auto one = strip_timings(suite_json(run_suite("core"))).dump();
    const unsigned n = std::max(4u, std::thread::hardware_concurrency());
    set_thread_count(n);
    const auto many = strip_timings(suite_json(run_suite("core"))).dump();
    set_thread_count(saved);
    o.expect(one == many, "outputs differ between 1 and " + std::to_string(n) + " threads");
  });

  std::printf("%d criterion line(s) failed\n", failed);
  return failed;
}
