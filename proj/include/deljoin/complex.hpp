#ifndef DELJOIN_COMPLEX_HPP
#define DELJOIN_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "common.hpp"

namespace deljoin {

using VertexId = std::uint32_t;
// Sorted, duplicate-free list of vertex ids. Ids index the complex's vertex
// list, which is kept in lexicographic label order, so id order and label
// order agree.
using Simplex = std::vector<VertexId>;

inline bool disjoint(const Simplex& a, const Simplex& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

inline Simplex merged(const Simplex& a, const Simplex& b) {
  Simplex out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Simplex without_index(const Simplex& s, std::size_t i) {
  Simplex out;
  out.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) out.push_back(s[j]);
  return out;
}

// Finite abstract simplicial complex with text vertex labels. Immutable once
// built; every nonempty face of a stored simplex is stored.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // `simplices` index into `labels`, which may be in any order. When
  // `close_under_faces` is false the input must already be face-closed.
  static SimplicialComplex from_simplices(std::string name, std::vector<std::string> labels,
                                          std::vector<Simplex> simplices, bool close_under_faces) {
    SimplicialComplex k;
    k.name_ = std::move(name);

    std::vector<VertexId> order(labels.size());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return labels[a] < labels[b]; });
    std::vector<VertexId> new_id(labels.size());
    k.vertices_.reserve(labels.size());
    for (VertexId i = 0; i < order.size(); ++i) {
      new_id[order[i]] = i;
      if (i > 0 && labels[order[i]] == labels[order[i - 1]])
        throw std::invalid_argument("duplicate vertex label '" + labels[order[i]] + "'");
      k.vertices_.push_back(std::move(labels[order[i]]));
    }

    for (auto& s : simplices) {
      if (s.empty()) throw std::invalid_argument("empty simplex");
      for (auto& v : s) {
        if (v >= new_id.size()) throw std::invalid_argument("simplex references unknown vertex");
        v = new_id[v];
      }
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("simplex repeats a vertex");
    }
    for (VertexId v = 0; v < k.vertices_.size(); ++v) simplices.push_back({v});

    if (close_under_faces) {
      std::vector<std::set<Simplex>> levels;
      std::size_t total = 0;
      for (const auto& s : simplices) {
        if (s.size() > 30) throw CapExceeded("simplex with more than 31 vertices cannot be face-closed");
        const std::uint32_t n = static_cast<std::uint32_t>(s.size());
        if (levels.size() < n) levels.resize(n);
        if (levels[n - 1].count(s)) continue;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
          Simplex face;
          for (std::uint32_t b = 0; b < n; ++b)
            if (mask >> b & 1) face.push_back(s[b]);
          if (levels[face.size() - 1].insert(std::move(face)).second) ++total;
        }
        check_cap(total, "face closure");
      }
      for (auto& level : levels) k.by_dim_.emplace_back(level.begin(), level.end());
    } else {
      std::size_t top = 0;
      for (const auto& s : simplices) top = std::max(top, s.size());
      k.by_dim_.resize(top);
      for (auto& s : simplices) k.by_dim_[s.size() - 1].push_back(std::move(s));
      for (auto& level : k.by_dim_) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
      }
      check_cap(k.simplex_count(), "complex construction");
      if (auto bad = k.first_unclosed()) throw std::invalid_argument("simplex set is not face-closed at " + *bad);
    }
    return k;
  }

  static SimplicialComplex from_facets(std::string name, std::vector<std::string> vertices,
                                       const std::vector<std::vector<std::string>>& facets) {
    std::map<std::string, VertexId> id;
    for (VertexId i = 0; i < vertices.size(); ++i)
      if (!id.emplace(vertices[i], i).second)
        throw std::invalid_argument("duplicate vertex label '" + vertices[i] + "'");
    std::vector<Simplex> simplices;
    simplices.reserve(facets.size());
    for (const auto& f : facets) {
      Simplex s;
      for (const auto& label : f) {
        auto it = id.find(label);
        if (it == id.end()) throw std::invalid_argument("facet uses undeclared vertex '" + label + "'");
        s.push_back(it->second);
      }
      simplices.push_back(std::move(s));
    }
    return from_simplices(std::move(name), std::move(vertices), std::move(simplices), true);
  }

  const std::string& name() const { return name_; }
  SimplicialComplex renamed(std::string name) const {
    SimplicialComplex k = *this;
    k.name_ = std::move(name);
    return k;
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::string& label(VertexId v) const { return vertices_.at(v); }
  bool empty() const { return vertices_.empty(); }
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

  // Simplices of dimension d in lexicographic order; empty for d out of range.
  const std::vector<Simplex>& simplices(int d) const {
    static const std::vector<Simplex> kNone;
    if (d < 0 || d > dim()) return kNone;
    return by_dim_[static_cast<std::size_t>(d)];
  }

  std::size_t simplex_count() const {
    std::size_t n = 0;
    for (const auto& level : by_dim_) n += level.size();
    return n;
  }

  // f_vector()[i] = number of i-simplices.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : by_dim_) f.push_back(level.size());
    return f;
  }

  std::optional<VertexId> find_vertex(std::string_view label) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == vertices_.end() || *it != label) return std::nullopt;
    return static_cast<VertexId>(it - vertices_.begin());
  }

  VertexId vertex(std::string_view label) const {
    if (auto v = find_vertex(label)) return *v;
    throw std::invalid_argument("unknown vertex '" + std::string(label) + "' in " + name_);
  }

  bool contains(const Simplex& s) const {
    if (s.empty() || s.size() > by_dim_.size()) return false;
    const auto& level = by_dim_[s.size() - 1];
    return std::binary_search(level.begin(), level.end(), s);
  }

  // Position of s within simplices(dim s), or nullopt.
  std::optional<std::size_t> index_of(const Simplex& s) const {
    if (s.empty() || s.size() > by_dim_.size()) return std::nullopt;
    const auto& level = by_dim_[s.size() - 1];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
  }

  std::vector<std::string> labels(const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (auto v : s) out.push_back(vertices_.at(v));
    return out;
  }

  // Maximal simplices, as sorted label lists in lexicographic order.
  std::vector<std::vector<std::string>> facets() const {
    std::vector<std::vector<bool>> covered(by_dim_.size());
    for (std::size_t d = 0; d < by_dim_.size(); ++d) covered[d].assign(by_dim_[d].size(), false);
    for (int d = 1; d <= dim(); ++d)
      for (const auto& s : simplices(d))
        for (std::size_t i = 0; i < s.size(); ++i)
          covered[static_cast<std::size_t>(d) - 1][*index_of(without_index(s, i))] = true;
    std::vector<std::vector<std::string>> out;
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
      for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
        if (!covered[d][i]) out.push_back(labels(by_dim_[d][i]));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Face-closure witness: description of the first simplex with a missing
  // codimension-one face, or nullopt when the complex is closed.
  std::optional<std::string> first_unclosed() const {
    for (int d = 1; d <= dim(); ++d)
      for (const auto& s : simplices(d))
        for (std::size_t i = 0; i < s.size(); ++i)
          if (!contains(without_index(s, i))) return describe(s);
    for (VertexId v = 0; v < vertices_.size(); ++v)
      if (!contains({v})) return vertices_[v];
    return std::nullopt;
  }

  std::string describe(const Simplex& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += vertices_.at(s[i]);
    }
    return out + "}";
  }

  template <class Fn>
  void for_each_simplex(Fn&& fn) const {
    for (const auto& level : by_dim_)
      for (const auto& s : level) fn(s);
  }

  // Same labels and simplices; names are ignored.
  bool operator==(const SimplicialComplex& other) const {
    return vertices_ == other.vertices_ && by_dim_ == other.by_dim_;
  }

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
};

// Same complex with every label passed through `relabel` (must stay injective).
inline SimplicialComplex relabeled(const SimplicialComplex& k,
                                   const std::function<std::string(const std::string&)>& relabel,
                                   std::string name) {
  std::vector<std::string> labels;
  labels.reserve(k.vertex_count());
  for (const auto& v : k.vertices()) labels.push_back(relabel(v));
  std::vector<Simplex> simplices;
  k.for_each_simplex([&](const Simplex& s) { simplices.push_back(s); });
  return SimplicialComplex::from_simplices(std::move(name), std::move(labels), std::move(simplices), false);
}

namespace detail {

inline void for_each_combination(VertexId n, std::size_t size,
                                 const std::function<void(const Simplex&)>& fn) {
  Simplex cur;
  std::function<void(VertexId)> rec = [&](VertexId start) {
    if (cur.size() == size) {
      fn(cur);
      return;
    }
    for (VertexId v = start; v + (size - cur.size()) <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

// The k-skeleton of the n-simplex, on vertices v0..vn.
inline SimplicialComplex simplex_skeleton(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("simplex_skeleton requires 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  std::size_t total = 0;
  for (int i = 0; i <= k; ++i) total += detail::binomial(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(i) + 1);
  check_cap(total, "simplex_skeleton");
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<Simplex> simplices;
  simplices.reserve(total);
  for (int size = 1; size <= k + 1; ++size)
    detail::for_each_combination(static_cast<VertexId>(n + 1), static_cast<std::size_t>(size),
                                 [&](const Simplex& s) { simplices.push_back(s); });
  return SimplicialComplex::from_simplices("skeleton:" + std::to_string(n) + ":" + std::to_string(k),
                                           std::move(labels), std::move(simplices), false);
}

inline SimplicialComplex full_simplex(int n) {
  return simplex_skeleton(n, n).renamed("simplex:" + std::to_string(n));
}

// The 0-complex [m] on vertices p0..p(m-1).
inline SimplicialComplex discrete_points(int m) {
  if (m < 1) throw std::invalid_argument("discrete_points requires m >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back("p" + std::to_string(i));
  return SimplicialComplex::from_simplices("points:" + std::to_string(m), std::move(labels), {}, false);
}

// The n-cycle on vertices u0..u(n-1).
inline SimplicialComplex cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
  std::vector<std::string> labels;
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) {
    labels.push_back("u" + std::to_string(i));
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
  }
  return SimplicialComplex::from_simplices("cycle:" + std::to_string(n), std::move(labels), std::move(edges), false);
}

// Vertices of K become "K/x", those of L become "L/y".
inline SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  const std::size_t count = (k.simplex_count() + 1) * (l.simplex_count() + 1) - 1;
  check_cap(count, "join");
  std::vector<std::string> labels;
  for (const auto& v : k.vertices()) labels.push_back("K/" + v);
  for (const auto& v : l.vertices()) labels.push_back("L/" + v);
  const VertexId offset = static_cast<VertexId>(k.vertex_count());

  std::vector<Simplex> left{Simplex{}};
  k.for_each_simplex([&](const Simplex& s) { left.push_back(s); });
  std::vector<Simplex> right{Simplex{}};
  l.for_each_simplex([&](const Simplex& s) {
    Simplex t = s;
    for (auto& v : t) v += offset;
    right.push_back(std::move(t));
  });

  std::vector<Simplex> simplices;
  simplices.reserve(count);
  for (const auto& a : left)
    for (const auto& b : right)
      if (!a.empty() || !b.empty()) simplices.push_back(merged(a, b));
  return SimplicialComplex::from_simplices("join(" + k.name() + "," + l.name() + ")", std::move(labels),
                                           std::move(simplices), false);
}

// Join with a point: vertices of K become "K/x", the apex is "c".
inline SimplicialComplex cone(const SimplicialComplex& k) {
  check_cap(2 * k.simplex_count() + 1, "cone");
  std::vector<std::string> labels;
  for (const auto& v : k.vertices()) labels.push_back("K/" + v);
  labels.push_back("c");
  const VertexId apex = static_cast<VertexId>(k.vertex_count());
  std::vector<Simplex> simplices{{apex}};
  k.for_each_simplex([&](const Simplex& s) {
    simplices.push_back(s);
    Simplex t = s;
    t.push_back(apex);
    simplices.push_back(std::move(t));
  });
  return SimplicialComplex::from_simplices("cone(" + k.name() + ")", std::move(labels), std::move(simplices),
                                           false);
}

// Sub-complex made of the given simplices of `p` (face-closed already),
// keeping only vertices that occur.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& p, const std::vector<Simplex>& simplices,
                                            std::string name) {
  std::vector<VertexId> used;
  for (const auto& s : simplices) used.insert(used.end(), s.begin(), s.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<VertexId> remap(p.vertex_count(), 0);
  std::vector<std::string> labels;
  for (VertexId i = 0; i < used.size(); ++i) {
    remap[used[i]] = i;
    labels.push_back(p.label(used[i]));
  }
  std::vector<Simplex> out;
  out.reserve(simplices.size());
  for (const auto& s : simplices) {
    Simplex t;
    for (auto v : s) t.push_back(remap[v]);
    out.push_back(std::move(t));
  }
  return SimplicialComplex::from_simplices(std::move(name), std::move(labels), std::move(out), false);
}

inline SimplicialComplex link(const SimplicialComplex& p, std::string_view vertex) {
  const VertexId v = p.vertex(vertex);
  std::vector<Simplex> simplices;
  for (int d = 1; d <= p.dim(); ++d)
    for (const auto& s : p.simplices(d))
      if (std::binary_search(s.begin(), s.end(), v)) {
        Simplex t;
        for (auto u : s)
          if (u != v) t.push_back(u);
        simplices.push_back(std::move(t));
      }
  return induced_subcomplex(p, simplices, "link(" + p.name() + "," + std::string(vertex) + ")");
}

struct LinksIntersection {
  SimplicialComplex complex;
  // join(complex, [3] on the chosen vertices) maps simplex-wise into P.
  bool contains_join_with_points = false;
};

inline LinksIntersection links_intersection(const SimplicialComplex& p, const std::vector<std::string>& vs) {
  if (vs.size() != 3) throw std::invalid_argument("links_intersection needs exactly 3 vertices");
  if (vs[0] == vs[1] || vs[0] == vs[2] || vs[1] == vs[2])
    throw std::invalid_argument("links_intersection vertices must be distinct");
  Simplex apexes;
  for (const auto& label : vs) apexes.push_back(p.vertex(label));
  std::sort(apexes.begin(), apexes.end());

  std::vector<Simplex> common;
  p.for_each_simplex([&](const Simplex& s) {
    if (!disjoint(s, apexes)) return;
    for (auto a : apexes)
      if (!p.contains(merged(s, {a}))) return;
    common.push_back(s);
  });
  std::string name = "lk(" + p.name() + ";" + vs[0] + "," + vs[1] + "," + vs[2] + ")";
  LinksIntersection out{induced_subcomplex(p, common, std::move(name)), false};

  // Check the containment on the join itself, mapping labels back into P.
  std::vector<std::string> pts(vs.begin(), vs.end());
  std::sort(pts.begin(), pts.end());
  const SimplicialComplex points = SimplicialComplex::from_simplices("apexes", pts, {}, false);
  const SimplicialComplex joined = join(out.complex, points);
  bool ok = true;
  joined.for_each_simplex([&](const Simplex& s) {
    if (!ok) return;
    Simplex image;
    for (auto v : s) image.push_back(p.vertex(joined.label(v).substr(2)));
    std::sort(image.begin(), image.end());
    ok = p.contains(image);
  });
  out.contains_join_with_points = ok;
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

enum class IsoStatus { isomorphic, not_isomorphic, cap_exceeded };

struct IsoResult {
  IsoStatus status = IsoStatus::not_isomorphic;
  std::vector<std::pair<std::string, std::string>> witness;  // K label -> L label
  std::size_t nodes = 0;
  std::string reason;

  bool isomorphic() const { return status == IsoStatus::isomorphic; }
};

namespace detail {

inline bool maps_onto(const SimplicialComplex& k, const SimplicialComplex& l, const std::vector<VertexId>& f,
                      std::string& reason) {
  if (k.f_vector() != l.f_vector()) {
    reason = "face vectors differ";
    return false;
  }
  bool ok = true;
  k.for_each_simplex([&](const Simplex& s) {
    if (!ok) return;
    Simplex image;
    for (auto v : s) image.push_back(f[v]);
    std::sort(image.begin(), image.end());
    if (!l.contains(image)) {
      reason = "image of " + k.describe(s) + " is not a simplex";
      ok = false;
    }
  });
  return ok;
}

}  // namespace detail

// Decides whether K and L are simplicially isomorphic. With a witness the
// bijection is checked directly; otherwise a backtracking search runs,
// pruned by per-vertex face counts and 1-skeleton adjacency, and gives up
// with cap_exceeded after `node_cap` search nodes.
inline IsoResult isomorphic(const SimplicialComplex& k, const SimplicialComplex& l,
                            const std::optional<std::map<std::string, std::string>>& witness = std::nullopt,
                            std::size_t node_cap = kDefaultIsoNodeCap) {
  IsoResult result;
  const std::size_t n = k.vertex_count();

  if (witness) {
    if (witness->size() != n || l.vertex_count() != n) {
      result.reason = "witness is not a bijection";
      return result;
    }
    std::vector<VertexId> f(n);
    std::vector<bool> hit(n, false);
    for (const auto& [from, to] : *witness) {
      auto a = k.find_vertex(from);
      auto b = l.find_vertex(to);
      if (!a || !b || hit[*b]) {
        result.reason = "witness is not a bijection";
        return result;
      }
      f[*a] = *b;
      hit[*b] = true;
    }
    if (detail::maps_onto(k, l, f, result.reason)) {
      result.status = IsoStatus::isomorphic;
      result.witness.assign(witness->begin(), witness->end());
    }
    return result;
  }

  if (n != l.vertex_count() || k.f_vector() != l.f_vector()) {
    result.reason = "face vectors differ";
    return result;
  }

  auto signatures = [](const SimplicialComplex& c) {
    std::vector<std::vector<std::size_t>> sig(c.vertex_count(), std::vector<std::size_t>(c.dim() + 1, 0));
    c.for_each_simplex([&](const Simplex& s) {
      for (auto v : s) ++sig[v][s.size() - 1];
    });
    return sig;
  };
  auto adjacency = [](const SimplicialComplex& c) {
    std::vector<std::vector<bool>> adj(c.vertex_count(), std::vector<bool>(c.vertex_count(), false));
    for (const auto& e : c.simplices(1)) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
    return adj;
  };
  const auto sig_k = signatures(k);
  const auto sig_l = signatures(l);
  {
    auto a = sig_k, b = sig_l;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      result.reason = "vertex face-count profiles differ";
      return result;
    }
  }
  const auto adj_k = adjacency(k);
  const auto adj_l = adjacency(l);

  // BFS order so each new vertex is constrained by already-placed neighbours.
  std::vector<VertexId> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    VertexId seed = 0;
    while (placed[seed]) ++seed;
    std::vector<VertexId> queue{seed};
    placed[seed] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      order.push_back(queue[qi]);
      for (VertexId u = 0; u < n; ++u)
        if (adj_k[queue[qi]][u] && !placed[u]) {
          placed[u] = true;
          queue.push_back(u);
        }
    }
  }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  // Simplices of dim >= 2 grouped by the position of their last-placed vertex.
  std::vector<std::vector<const Simplex*>> closing(n);
  for (int d = 2; d <= k.dim(); ++d)
    for (const auto& s : k.simplices(d)) {
      std::size_t last = 0;
      for (auto v : s) last = std::max(last, position[v]);
      closing[last].push_back(&s);
    }

  std::vector<VertexId> f(n, 0);
  std::vector<bool> used(n, false);
  bool exceeded = false;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const VertexId a = order[depth];
    for (VertexId b = 0; b < n; ++b) {
      if (used[b] || sig_k[a] != sig_l[b]) continue;
      if (++result.nodes > node_cap) {
        exceeded = true;
        return false;
      }
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j)
        ok = adj_k[a][order[j]] == adj_l[b][f[order[j]]];
      if (!ok) continue;
      f[a] = b;
      for (const Simplex* s : closing[depth]) {
        Simplex image;
        for (auto v : *s) image.push_back(f[v]);
        std::sort(image.begin(), image.end());
        if (!l.contains(image)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[b] = true;
      if (search(depth + 1)) return true;
      used[b] = false;
      if (exceeded) return false;
    }
    return false;
  };

  if (search(0)) {
    std::string reason;
    if (!detail::maps_onto(k, l, f, reason)) throw VerificationError("isomorphism search produced a bad map: " + reason);
    result.status = IsoStatus::isomorphic;
    for (VertexId v = 0; v < n; ++v) result.witness.emplace_back(k.label(v), l.label(f[v]));
  } else if (exceeded) {
    result.status = IsoStatus::cap_exceeded;
    result.reason = "search node cap " + std::to_string(node_cap) + " exceeded";
  } else {
    result.reason = "exhaustive search found no isomorphism";
  }
  return result;
}

}  // namespace deljoin

#endif  // DELJOIN_COMPLEX_HPP
