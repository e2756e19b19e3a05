#ifndef DELJOIN_SUITE_HPP
#define DELJOIN_SUITE_HPP

// The verification suite behind `deljoin verify-paper`: named checks, run as
// independent jobs, reported in a fixed order.

#include <atomic>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "obstruction.hpp"

namespace deljoin {

// deljoin([3]) is a hexagon: (6, 6) cells, isomorphic to C6, Betti (1, 1), h = 1.
inline CheckReport hexagon_check() {
  return detail::run_check("hexagon", json{{"K", "points:3"}}, [](CheckReport& r) {
    const Z2Complex x = deleted_join(discrete_points(3));
    const auto f = x.complex().f_vector();
    r.h_values["f_vector"] = f;
    r.add("cells", f == std::vector<std::size_t>{6, 6}, "6 vertices and 6 edges");
    const IsoResult iso = isomorphic(x.complex(), cycle_graph(6));
    json witness = json::object();
    for (const auto& [a, b] : iso.witness) witness[a] = b;
    r.h_values["witness"] = witness;
    r.add("isomorphic_to_C6", iso.isomorphic(), iso.isomorphic() ? "explicit 6-cycle bijection" : iso.reason);
    const auto b = betti(x);
    r.h_values["betti"] = b;
    r.add("betti", b == std::vector<std::size_t>{1, 1}, "Betti (1, 1)");
    const int h = cohomological_index(x);
    r.h_values["h"] = h;
    r.add("index", h == 1, "h = 1");
    r.settle();
  });
}

// deljoin(skeleton(2k+2, k)) is a tight homology (2k+1)-sphere.
inline CheckReport sphere_check(int k) {
  return detail::run_check("sphere", json{{"k", k}, {"K", "skeleton:" + std::to_string(2 * k + 2) + ":" + std::to_string(k)}},
                           [k](CheckReport& r) {
                             const Z2Complex x = deleted_join(simplex_skeleton(2 * k + 2, k));
                             const SphereCertificate c = homology_sphere_certificate(x, 2 * k + 1);
                             r.h_values["betti"] = c.betti;
                             r.h_values["h"] = c.h ? json(*c.h) : json(nullptr);
                             r.add("homology_sphere", c.sphere, "Betti numbers of S^" + std::to_string(2 * k + 1));
                             r.add("tight", c.tight, "h = " + std::to_string(2 * k + 1));
                             r.settle();
                           });
}

inline CheckReport certificate_check(const SimplicialComplex& k, int d, Verdict expected) {
  return detail::run_check("certify", json{{"K", k.name()}, {"d", d}}, [&](CheckReport& r) {
    const Certificate c = certify_nonembeddable(k, d);
    if (c.verdict == Verdict::indeterminate) throw CapExceeded(c.trace.back());
    r.h_values["h"] = *c.h;
    r.add("verdict", c.verdict == expected, to_string(c.verdict) + ", expected " + to_string(expected));
    r.conclusions.push_back(c.to_json());
    r.settle();
  });
}

struct SuiteJob {
  std::string title;
  std::function<CheckReport()> run;
};

inline std::vector<SimplicialComplex> theorem1_corpus() {
  return {discrete_points(1).renamed("point"), full_simplex(1), discrete_points(3), simplex_skeleton(2, 1),
          simplex_skeleton(4, 1), simplex_skeleton(6, 2)};
}

// "core" runs in seconds; "full" adds the 3-dimensional van Kampen-Flores
// instances and the join index-shift checks.
inline std::vector<SuiteJob> suite_jobs(const std::string& suite) {
  if (suite != "core" && suite != "full") throw std::invalid_argument("unknown suite '" + suite + "'");
  const bool full = suite == "full";
  std::vector<SuiteJob> jobs;
  jobs.push_back({"hexagon deljoin([3])", [] { return hexagon_check(); }});
  for (int k = 1; k <= (full ? 3 : 2); ++k)
    jobs.push_back({"sphere k=" + std::to_string(k), [k] { return sphere_check(k); }});
  jobs.push_back({"certify skeleton:6:2 d=4",
                  [] { return certificate_check(simplex_skeleton(6, 2), 4, Verdict::certified_nonembeddable); }});
  if (full)
    jobs.push_back({"certify skeleton:8:3 d=6",
                    [] { return certificate_check(simplex_skeleton(8, 3), 6, Verdict::certified_nonembeddable); }});
  jobs.push_back({"certify edge d=1", [] { return certificate_check(full_simplex(1), 1, Verdict::no_certificate); }});
  jobs.push_back({"certify cycle:4 d=2", [] { return certificate_check(cycle_graph(4), 2, Verdict::no_certificate); }});
  for (const auto& k : theorem1_corpus())
    jobs.push_back({"theorem1 " + k.name(), [k] { return theorem1_check(k); }});
  const std::vector<std::pair<SimplicialComplex, SimplicialComplex>> pairs{
      {simplex_skeleton(4, 1), discrete_points(3)},
      {full_simplex(1), full_simplex(1)},
      {discrete_points(1), discrete_points(1)},
      {simplex_skeleton(2, 1), discrete_points(3)},
      {discrete_points(3), full_simplex(1)},
      {simplex_skeleton(6, 2), discrete_points(3)},
  };
  for (const auto& [k, l] : pairs)
    jobs.push_back({"joindecomp " + k.name() + " " + l.name(), [k, l] { return join_decomposition_check(k, l); }});
  for (const auto& k : {discrete_points(2), discrete_points(3), simplex_skeleton(2, 1), simplex_skeleton(4, 1)})
    jobs.push_back({"conelemma " + k.name(), [k] { return cone_lemma_check(k); }});
  jobs.push_back({"gvkf [1]", [] { return gvkf_check({1}); }});
  jobs.push_back({"gvkf [1,1]", [] { return gvkf_check({1, 1}); }});
  if (full) jobs.push_back({"gvkf [2]", [] { return gvkf_check({2}); }});
  jobs.push_back({"corollary2 join(skeleton:6:2,points:3) d=4", [] {
                    return corollary2_check(join(simplex_skeleton(6, 2), discrete_points(3)),
                                            {"L/p0", "L/p1", "L/p2"}, 4);
                  }});
  if (full) {
    jobs.push_back({"theorem3a skeleton:6:2 points:3",
                    [] { return theorem3a_check(simplex_skeleton(6, 2), discrete_points(3)); }});
    jobs.push_back({"theorem3a skeleton:4:1 skeleton:4:1",
                    [] { return theorem3a_check(simplex_skeleton(4, 1), simplex_skeleton(4, 1)); }});
    jobs.push_back({"theorem3a point simplex:1",
                    [] { return theorem3a_check(discrete_points(1).renamed("point"), full_simplex(1)); }});
  }
  return jobs;
}

struct SuiteResult {
  std::string title;
  CheckReport report;
};

// Jobs run concurrently on up to thread_count() workers; results keep job order.
inline std::vector<SuiteResult> run_suite(const std::string& suite) {
  const auto jobs = suite_jobs(suite);
  std::vector<SuiteResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = {jobs[i].title, jobs[i].run()};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(jobs.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

// Report documents with timings removed, for byte comparison across runs.
inline json strip_timings(json j) {
  if (j.is_object()) j.erase("timings_ms");
  if (j.is_object() || j.is_array())
    for (auto it = j.begin(); it != j.end(); ++it) *it = strip_timings(*it);
  return j;
}

inline json suite_json(const std::vector<SuiteResult>& results) {
  json out = json::array();
  for (const auto& r : results) out.push_back(r.report.to_json());
  return out;
}

}  // namespace deljoin

#endif  // DELJOIN_SUITE_HPP
