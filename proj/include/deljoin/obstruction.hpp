#ifndef DELJOIN_OBSTRUCTION_HPP
#define DELJOIN_OBSTRUCTION_HPP

// Index-based non-embeddability certificates and the join/cone checks built
// on them. Certificates are one-sided: they can prove that a complex does not
// embed, never that it does.
//
// The chain behind every certificate: an embedding K -> R^d gives an
// equivariant map from the deleted join of K to S^d, and any equivariant map
// X -> S^d forces h(X) <= d. So h(deleted_join(K)) >= d+1 rules out R^d.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "deleted.hpp"
#include "homology.hpp"
#include "index.hpp"

namespace deljoin {

using json = nlohmann::ordered_json;

enum class Verdict { certified_nonembeddable, no_certificate, indeterminate };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_nonembeddable: return "CERTIFIED_NONEMBEDDABLE";
    case Verdict::no_certificate: return "NO_CERTIFICATE";
    case Verdict::indeterminate: return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

struct Certificate {
  std::string subject;
  int target_dim = 0;
  std::optional<int> h;  // index of the deleted join; empty when indeterminate
  Verdict verdict = Verdict::indeterminate;
  std::vector<std::string> trace;

  json to_json() const {
    json j;
    j["subject"] = subject;
    j["target_dim"] = target_dim;
    j["h"] = h ? json(*h) : json(nullptr);
    j["verdict"] = to_string(verdict);
    j["justification"] = trace;
    return j;
  }
};

inline Certificate certify_nonembeddable(const SimplicialComplex& k, int d) {
  if (k.empty()) throw std::invalid_argument("certify_nonembeddable needs a nonempty complex");
  if (d < 0) throw std::invalid_argument("target dimension must be >= 0");
  Certificate c;
  c.subject = k.name();
  c.target_dim = d;
  const std::string rd = "R^" + std::to_string(d);
  c.trace.push_back("an embedding " + k.name() + " -> " + rd + " gives an equivariant map from the deleted product to S^" +
                    std::to_string(d - 1));
  c.trace.push_back("passing to the deleted join gives an equivariant map deljoin(" + k.name() + ") -> S^" +
                    std::to_string(d));
  c.trace.push_back("such a map forces h(deljoin) <= " + std::to_string(d));
  try {
    c.h = cohomological_index(deleted_join(k));
  } catch (const CapExceeded& e) {
    c.verdict = Verdict::indeterminate;
    c.trace.push_back(std::string("index not computed: ") + e.what());
    return c;
  }
  if (*c.h >= d + 1) {
    c.verdict = Verdict::certified_nonembeddable;
    c.trace.push_back("computed h = " + std::to_string(*c.h) + " >= " + std::to_string(d + 1) + ": " + k.name() +
                      " does not embed in " + rd);
  } else {
    c.verdict = Verdict::no_certificate;
    c.trace.push_back("computed h = " + std::to_string(*c.h) + " <= " + std::to_string(d) +
                      ": no obstruction (this is not a claim of embeddability)");
  }
  return c;
}

struct CrossCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  bool skipped = false;
};

struct CheckReport {
  std::string check;
  json inputs = json::object();
  json h_values = json::object();
  std::string verdict = "FAIL";  // PASS, FAIL, SKIPPED or INDETERMINATE
  std::vector<std::string> hypothesis_flags;
  std::vector<CrossCheck> cross_checks;
  json conclusions = json::array();
  json timings_ms = json::object();

  bool passed() const { return verdict == "PASS"; }

  void add(std::string name, bool pass, std::string detail) {
    cross_checks.push_back({std::move(name), pass, std::move(detail), false});
  }

  // PASS iff every cross check that ran passed.
  void settle() {
    verdict = "PASS";
    for (const auto& c : cross_checks)
      if (!c.skipped && !c.pass) verdict = "FAIL";
  }

  json to_json() const {
    json j;
    j["check"] = check;
    j["inputs"] = inputs;
    j["h_values"] = h_values;
    j["verdict"] = verdict;
    j["hypothesis_flags"] = hypothesis_flags;
    json cc = json::array();
    for (const auto& c : cross_checks) {
      json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      e["skipped"] = c.skipped;
      e["detail"] = c.detail;
      cc.push_back(e);
    }
    j["cross_checks"] = cc;
    j["conclusions"] = conclusions;
    j["timings_ms"] = timings_ms;
    return j;
  }
};

namespace detail {

// Runs body(report); a CapExceeded anywhere turns the report INDETERMINATE.
template <class Body>
CheckReport run_check(std::string name, json inputs, Body&& body) {
  CheckReport r;
  r.check = std::move(name);
  r.inputs = std::move(inputs);
  Stopwatch total;
  try {
    body(r);
  } catch (const CapExceeded& e) {
    r.verdict = "INDETERMINATE";
    r.cross_checks.push_back({"cell_cap", false, e.what(), true});
  }
  r.timings_ms["total"] = total.elapsed_ms();
  return r;
}

template <class Fn>
auto timed(CheckReport& r, const std::string& key, Fn&& fn) {
  Stopwatch sw;
  auto out = fn();
  r.timings_ms[key] = sw.elapsed_ms();
  return out;
}

inline std::string metastable_flag(int d, int k) {
  const bool ok = 2 * d >= 3 * k + 3 && 3 * k + 3 >= 6;
  return "2d>=3k+3>=6 with d=" + std::to_string(d) + ", k=" + std::to_string(k) + ": " +
         (ok ? "satisfied" : "not satisfied");
}

}  // namespace detail

// h(deljoin(K*[3])) = h(deljoin(K)) + 2, by the direct route and through the
// decomposition deljoin(K*[3]) = deljoin(K) * hexagon.
inline CheckReport theorem1_check(const SimplicialComplex& k) {
  return detail::run_check("theorem1", json{{"K", k.name()}}, [&](CheckReport& r) {
    const SimplicialComplex three = discrete_points(3);
    const int h1 = detail::timed(r, "h_K", [&] { return cohomological_index(deleted_join(k)); });
    const auto jd = detail::timed(r, "decomposition", [&] { return verify_join_decomposition(k, three); });
    r.add("join_decomposition", jd.pass, jd.detail);
    const int h2 = detail::timed(r, "h_direct", [&] { return cohomological_index(jd.lhs); });
    const int h2z = detail::timed(r, "h_z2join", [&] { return cohomological_index(jd.rhs); });
    r.h_values["h_deljoin_K"] = h1;
    r.h_values["h_deljoin_K*[3]"] = h2;
    r.h_values["h_z2join"] = h2z;
    r.add("routes_agree", h2 == h2z, std::to_string(h2) + " direct vs " + std::to_string(h2z) + " via z2_join");
    r.add("plus_two", h2 == h1 + 2, std::to_string(h2) + " = " + std::to_string(h1) + " + 2");
    bool lifts = true;
    for (int d = 0; d + 1 <= h1; ++d) {
      const bool lifted = h2 >= d + 3;
      lifts = lifts && lifted;
      r.conclusions.push_back(json{{"d", d},
                                   {"K_certified_in_R^d", true},
                                   {"K*[3]_certified_in_R^(d+2)", lifted}});
      r.hypothesis_flags.push_back(detail::metastable_flag(d, k.dim()));
    }
    r.add("implication_table", lifts, "every certificate for K in R^d lifts to K*[3] in R^(d+2)");
    r.settle();
  });
}

// With deljoin(L) a tight homology q-sphere: h(deljoin(K*L)) = h(deljoin(K)) + q + 1.
inline CheckReport theorem3a_check(const SimplicialComplex& k, const SimplicialComplex& l) {
  return detail::run_check("theorem3a", json{{"K", k.name()}, {"L", l.name()}}, [&](CheckReport& r) {
    const Z2Complex dl = deleted_join(l);
    const int q = dl.dim();
    const SphereCertificate cert = detail::timed(r, "sphere_L", [&] { return homology_sphere_certificate(dl, q); });
    r.inputs["q"] = q;
    if (!cert.tight) {
      r.verdict = "SKIPPED";
      r.cross_checks.push_back({"tight_sphere_L", false,
                                "deljoin(L) is not a certified tight homology " + std::to_string(q) + "-sphere",
                                true});
      return;
    }
    r.add("tight_sphere_L", true, "deljoin(L) is a tight homology " + std::to_string(q) + "-sphere");
    const int h1 = detail::timed(r, "h_K", [&] { return cohomological_index(deleted_join(k)); });
    const auto jd = detail::timed(r, "decomposition", [&] { return verify_join_decomposition(k, l); });
    r.add("join_decomposition", jd.pass, jd.detail);
    const int hd = detail::timed(r, "h_direct", [&] { return cohomological_index(jd.lhs); });
    const int hz = detail::timed(r, "h_z2join", [&] { return cohomological_index(jd.rhs); });
    r.h_values["h_deljoin_K"] = h1;
    r.h_values["h_deljoin_L"] = *cert.h;
    r.h_values["h_deljoin_K*L"] = hd;
    r.h_values["h_z2join"] = hz;
    r.add("routes_agree", hd == hz, std::to_string(hd) + " direct vs " + std::to_string(hz) + " via z2_join");
    r.add("index_shift", hd == h1 + q + 1,
          std::to_string(hd) + " = " + std::to_string(h1) + " + " + std::to_string(q) + " + 1");
    // Both directions: K in R^d and K*L in R^(d+q+1); equal rows when the shift holds.
    bool equivalent = true;
    for (int d = 0; d + 1 <= std::max(h1, hd - q - 1); ++d) {
      const bool k_cert = h1 >= d + 1;
      const bool kl_cert = hd >= d + q + 2;
      equivalent = equivalent && k_cert == kl_cert;
      r.conclusions.push_back(json{{"d", d},
                                   {"K_certified_in_R^d", k_cert},
                                   {"K*L_certified_in_R^(d+q+1)", kl_cert}});
      r.hypothesis_flags.push_back(detail::metastable_flag(d, k.dim()));
    }
    r.add("implication_table", equivalent, "K certified in R^d iff K*L certified in R^(d+q+1)");
    r.settle();
  });
}

// The join of van Kampen-Flores complexes skeleton(2k_i+2, k_i) does not
// embed in R^(2 dim P).
inline CheckReport gvkf_check(const std::vector<int>& ks) {
  if (ks.empty()) throw std::invalid_argument("gvkf_check needs at least one k");
  for (int k : ks)
    if (k < 1) throw std::invalid_argument("gvkf_check needs every k >= 1");
  return detail::run_check("gvkf", json{{"ks", ks}}, [&](CheckReport& r) {
    std::optional<SimplicialComplex> p;
    std::optional<Z2Complex> z;
    int expected_dim = static_cast<int>(ks.size()) - 1;
    int expected_h = static_cast<int>(ks.size()) - 1;
    bool spheres = true;
    for (int k : ks) {
      const SimplicialComplex factor = simplex_skeleton(2 * k + 2, k);
      const Z2Complex dj = deleted_join(factor);
      const SphereCertificate cert = homology_sphere_certificate(dj, 2 * k + 1);
      spheres = spheres && cert.tight;
      p = p ? join(*p, factor) : factor;
      z = z ? z2_join(*z, dj) : dj;
      expected_dim += k;
      expected_h += 2 * k + 1;
    }
    r.add("factor_spheres", spheres, "each deljoin(skeleton(2k+2,k)) is a tight homology (2k+1)-sphere");
    r.inputs["P"] = p->name();
    r.h_values["dim_P"] = p->dim();
    r.add("dim_P", p->dim() == expected_dim, "dim P = sum k_i + p - 1 = " + std::to_string(expected_dim));
    const Certificate cert = detail::timed(r, "certify", [&] { return certify_nonembeddable(*p, 2 * expected_dim); });
    if (cert.verdict == Verdict::indeterminate) throw CapExceeded(cert.trace.back());
    const int hz = detail::timed(r, "h_z2join", [&] { return cohomological_index(*z); });
    r.h_values["h_deljoin_P"] = *cert.h;
    r.h_values["h_z2join"] = hz;
    r.add("index", *cert.h == expected_h,
          std::to_string(*cert.h) + " = sum(2k_i+1) + p - 1 = " + std::to_string(expected_h));
    r.add("routes_agree", *cert.h == hz, std::to_string(*cert.h) + " direct vs " + std::to_string(hz) + " via z2_join");
    r.add("certified", cert.verdict == Verdict::certified_nonembeddable,
          "P does not embed in R^" + std::to_string(2 * expected_dim));
    r.conclusions.push_back(cert.to_json());
    r.settle();
  });
}

// K = intersection of the links of three vertices of P; P contains K*[3],
// so a certificate for K in R^d transfers to P in R^(d+2).
inline CheckReport corollary2_check(const SimplicialComplex& p, const std::vector<std::string>& vs, int d) {
  return detail::run_check("corollary2", json{{"P", p.name()}, {"vertices", vs}, {"d", d}}, [&](CheckReport& r) {
    const LinksIntersection li = links_intersection(p, vs);
    const SimplicialComplex& k = li.complex;
    r.inputs["K"] = k.name();
    r.h_values["dim_K"] = k.dim();
    r.add("contains_K*[3]", li.contains_join_with_points, "join of K with the three vertices lies in P");

    Certificate cert;
    if (k.empty()) {
      cert.subject = k.name();
      cert.target_dim = d;
      cert.verdict = Verdict::no_certificate;
      cert.trace.push_back("links intersection is empty; nothing to certify");
      r.hypothesis_flags.push_back("k undefined: links intersection is empty");
    } else {
      cert = detail::timed(r, "certify", [&] { return certify_nonembeddable(k, d); });
      if (cert.verdict == Verdict::indeterminate) throw CapExceeded(cert.trace.back());
      r.h_values["h_deljoin_K"] = *cert.h;
      r.hypothesis_flags.push_back(detail::metastable_flag(d, k.dim()));
    }
    json conclusion = cert.to_json();
    const bool certified = cert.verdict == Verdict::certified_nonembeddable;
    conclusion["P_certified_in_R^(d+2)"] = certified;
    r.conclusions.push_back(conclusion);

    if (certified) {
      try {
        const int hp = detail::timed(r, "h_P", [&] { return cohomological_index(deleted_join(p)); });
        r.h_values["h_deljoin_P"] = hp;
        r.add("P_index_bound", hp >= d + 3, "h(deljoin(P)) = " + std::to_string(hp) + " >= d + 3");
      } catch (const CapExceeded& e) {
        r.cross_checks.push_back({"P_index_bound", false, e.what(), true});
      }
    }
    r.settle();
  });
}

inline CheckReport cone_lemma_check(const SimplicialComplex& k) {
  return detail::run_check("conelemma", json{{"K", k.name()}}, [&](CheckReport& r) {
    const auto rep = detail::timed(r, "collapse", [&] { return cone_collapse_report(k); });
    r.h_values["quotient_betti"] = rep.quotient_betti;
    r.h_values["suspension_betti"] = rep.suspension_betti;
    r.add("preimages", rep.subcomplexes_ok,
          "c x K and K x c: " + std::to_string(rep.collapsed_first) + " + " + std::to_string(rep.collapsed_second) +
              " cells, closed, disjoint, swapped");
    r.add("homology_matches_suspension", rep.match, rep.detail);
    r.settle();
  });
}

inline CheckReport join_decomposition_check(const SimplicialComplex& k, const SimplicialComplex& l) {
  return detail::run_check("joindecomp", json{{"K", k.name()}, {"L", l.name()}}, [&](CheckReport& r) {
    const auto jd = detail::timed(r, "decomposition", [&] { return verify_join_decomposition(k, l); });
    r.h_values["f_vector_lhs"] = jd.lhs_f_vector;
    r.h_values["f_vector_rhs"] = jd.rhs_f_vector;
    r.add("isomorphism", jd.pass, jd.detail);
    r.settle();
  });
}

// {"complex", "dim", "betti", "h", "sphere_certificate", "tight", "timings_ms"}
inline json index_report(const Z2Complex& x) {
  json j;
  json timings = json::object();
  Stopwatch sw;
  const auto b = betti(x);
  timings["betti"] = sw.elapsed_ms();
  Stopwatch sw2;
  const int h = cohomological_index(x);
  timings["index"] = sw2.elapsed_ms();
  const bool sphere = x.dim() >= 0 && b == sphere_betti(x.dim());
  j["complex"] = x.name();
  j["dim"] = x.dim();
  j["betti"] = b;
  j["h"] = h;
  j["sphere_certificate"] = sphere;
  j["tight"] = sphere && h == x.dim();
  j["timings_ms"] = timings;
  return j;
}

}  // namespace deljoin

#endif  // DELJOIN_OBSTRUCTION_HPP
