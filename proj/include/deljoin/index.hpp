#ifndef DELJOIN_INDEX_HPP
#define DELJOIN_INDEX_HPP

// Quotient of a free Z2-complex as a Delta-complex, the 1-cocycle of the
// double cover, and the cohomological index: the largest n for which the
// n-th cup power of that class is nonzero.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf2.hpp"
#include "homology.hpp"
#include "z2complex.hpp"

namespace deljoin {

struct QuotientCell {
  Simplex lift;                     // canonical lift, sorted by vertex id
  std::vector<VertexId> vertices;   // the same vertices, in orbit order
  std::vector<std::uint32_t> faces; // faces[i]: cell obtained by deleting vertices[i]
};

// One cell per orbit of simplices. Vertices of a cell are ordered by the
// orbit order (orbit of v ranked by min(v, T v)); freeness makes these
// ranks distinct within every simplex, so each cell is an ordered simplex
// and face maps are well defined.
class DeltaQuotient {
 public:
  DeltaQuotient() = default;

  explicit DeltaQuotient(const Z2Complex& x) {
    const auto& k = x.complex();
    orbit_rank_.resize(k.vertex_count());
    for (VertexId v = 0; v < k.vertex_count(); ++v) orbit_rank_[v] = std::min(v, x.partner(v));

    cells_.resize(static_cast<std::size_t>(k.dim() + 1));
    for (int d = 0; d <= k.dim(); ++d) {
      auto& level = cells_[static_cast<std::size_t>(d)];
      for (const auto& s : k.simplices(d)) {
        const Simplex t = x.apply(s);
        if (t == s) throw FreenessError("simplex fixed by the involution: " + k.describe(s));
        if (s < t) {
          QuotientCell c;
          c.lift = s;
          c.vertices = s;
          std::sort(c.vertices.begin(), c.vertices.end(),
                    [&](VertexId a, VertexId b) { return orbit_rank_[a] < orbit_rank_[b]; });
          for (std::size_t i = 1; i < c.vertices.size(); ++i)
            if (orbit_rank_[c.vertices[i]] == orbit_rank_[c.vertices[i - 1]])
              throw FreenessError("simplex contains both members of an orbit: " + k.describe(s));
          level.push_back(std::move(c));
        }
      }
      if (2 * level.size() != k.simplices(d).size())
        throw VerificationError("quotient cell count is not half the simplex count in dim " + std::to_string(d));
    }

    for (int d = 1; d <= k.dim(); ++d)
      for (auto& c : cells_[static_cast<std::size_t>(d)]) {
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
          Simplex face;
          for (std::size_t j = 0; j < c.vertices.size(); ++j)
            if (j != i) face.push_back(c.vertices[j]);
          std::sort(face.begin(), face.end());
          c.faces.push_back(static_cast<std::uint32_t>(index_of_orbit(x, face)));
        }
      }
  }

  int dim() const { return static_cast<int>(cells_.size()) - 1; }

  const std::vector<QuotientCell>& cells(int d) const {
    static const std::vector<QuotientCell> kNone;
    if (d < 0 || d > dim()) return kNone;
    return cells_[static_cast<std::size_t>(d)];
  }

  std::vector<std::size_t> cell_counts() const {
    std::vector<std::size_t> out;
    for (const auto& level : cells_) out.push_back(level.size());
    return out;
  }

  VertexId orbit_rank(VertexId v) const { return orbit_rank_.at(v); }

  // Index of the cell reached from (d, i) by deleting all vertices outside
  // positions [first, last] through repeated face maps.
  std::size_t sub_cell(int d, std::size_t i, std::size_t first, std::size_t last) const {
    std::size_t cell = i;
    // Drop trailing vertices first, so "first" stays a valid position.
    for (int cur = d; cur > static_cast<int>(last); --cur)
      cell = cells(cur)[cell].faces[static_cast<std::size_t>(cur)];
    int cur = static_cast<int>(last);
    for (std::size_t dropped = 0; dropped < first; ++dropped, --cur) cell = cells(cur)[cell].faces[0];
    return cell;
  }

 private:
  std::size_t index_of_orbit(const Z2Complex& x, const Simplex& s) const {
    const Simplex t = x.apply(s);
    const Simplex& key = s < t ? s : t;
    const auto& level = cells_[key.size() - 1];
    auto it = std::lower_bound(level.begin(), level.end(), key,
                               [](const QuotientCell& c, const Simplex& k) { return c.lift < k; });
    if (it == level.end() || it->lift != key) throw VerificationError("quotient face lookup failed");
    return static_cast<std::size_t>(it - level.begin());
  }

  std::vector<VertexId> orbit_rank_;
  std::vector<std::vector<QuotientCell>> cells_;
};

inline DeltaQuotient quotient(const Z2Complex& x) { return DeltaQuotient(x); }

// Faces of a Delta-complex cell can coincide, so entries accumulate mod 2.
inline ChainComplexGF2 chain_complex(const DeltaQuotient& q) {
  ChainComplexGF2 cc;
  cc.cells = q.cell_counts();
  for (int d = 0; d <= q.dim(); ++d) {
    GF2Matrix m(d == 0 ? 0 : q.cells(d - 1).size(), q.cells(d).size());
    if (d > 0)
      for (std::size_t j = 0; j < q.cells(d).size(); ++j)
        for (auto f : q.cells(d)[j].faces) m.flip(f, j);
    cc.boundary.push_back(std::move(m));
  }
  return cc;
}

struct CoverCocycle {
  std::vector<std::uint8_t> sheet;  // per vertex of X; sheet(T v) = 1 - sheet(v)
  std::vector<std::uint8_t> w;      // per 1-cell of the quotient
  std::size_t quotient_components = 0;
  std::size_t nontrivial_components = 0;  // components where w has nonzero monodromy

  bool class_nonzero() const { return nontrivial_components > 0; }
};

namespace detail {

inline bool ends_with_copy1(const std::string& label) {
  return label.size() >= 2 && label.compare(label.size() - 2, 2, "#1") == 0;
}

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace detail

// Builds the sheet labelling and w, checks that w is a cocycle and that its
// monodromy over each quotient component matches whether the preimage of
// that component is connected.
inline CoverCocycle cover_class(const Z2Complex& x, const DeltaQuotient& q) {
  const auto& k = x.complex();
  CoverCocycle cov;
  cov.sheet.assign(k.vertex_count(), 0);
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    const VertexId t = x.partner(v);
    const bool v1 = detail::ends_with_copy1(k.label(v));
    const bool t1 = detail::ends_with_copy1(k.label(t));
    if (v1 != t1)
      cov.sheet[v] = v1 ? 0 : 1;
    else
      cov.sheet[v] = v < t ? 0 : 1;
  }

  const auto& edges = q.cells(1);
  cov.w.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& lift = edges[e].vertices;
    cov.w[e] = cov.sheet[lift[0]] ^ cov.sheet[lift[1]];
    const std::uint8_t other = cov.sheet[x.partner(lift[0])] ^ cov.sheet[x.partner(lift[1])];
    if (other != cov.w[e]) throw VerificationError("cover cocycle depends on the lift");
  }
  for (const auto& c : q.cells(2))
    if (cov.w[c.faces[0]] ^ cov.w[c.faces[1]] ^ cov.w[c.faces[2]])
      throw VerificationError("cover cochain is not a cocycle");

  // Monodromy: try to integrate w along a spanning forest of the quotient.
  const std::size_t nq = q.cells(0).size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nq);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    // faces[0] drops vertices[0], so it is the endpoint vertices[1].
    const std::size_t a = edges[e].faces[1];
    const std::size_t b = edges[e].faces[0];
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  std::vector<int> potential(nq, -1);
  std::vector<std::size_t> component(nq, 0);
  std::vector<bool> twisted;
  for (std::size_t root = 0; root < nq; ++root) {
    if (potential[root] >= 0) continue;
    const std::size_t comp = twisted.size();
    twisted.push_back(false);
    potential[root] = 0;
    component[root] = comp;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (auto [v, e] : adj[u]) {
        const int expect = potential[u] ^ cov.w[e];
        if (potential[v] < 0) {
          potential[v] = expect;
          component[v] = comp;
          stack.push_back(v);
        } else if (potential[v] != expect) {
          twisted[comp] = true;
        }
      }
    }
  }
  cov.quotient_components = twisted.size();
  cov.nontrivial_components = static_cast<std::size_t>(std::count(twisted.begin(), twisted.end(), true));

  // Connected components of X lying over each quotient component.
  std::vector<std::size_t> parent(k.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& e : k.simplices(1)) parent[detail::find_root(parent, e[0])] = detail::find_root(parent, e[1]);
  std::vector<std::size_t> vertex_cell(k.vertex_count());
  for (std::size_t i = 0; i < nq; ++i) {
    const VertexId v = q.cells(0)[i].lift[0];
    vertex_cell[v] = vertex_cell[x.partner(v)] = i;
  }
  std::vector<std::vector<std::size_t>> roots(cov.quotient_components);
  for (VertexId v = 0; v < k.vertex_count(); ++v)
    roots[component[vertex_cell[v]]].push_back(detail::find_root(parent, v));
  for (std::size_t c = 0; c < roots.size(); ++c) {
    auto& r = roots[c];
    std::sort(r.begin(), r.end());
    const auto pieces = static_cast<std::size_t>(std::unique(r.begin(), r.end()) - r.begin());
    if (pieces != (twisted[c] ? 1u : 2u))
      throw VerificationError("double cover monodromy disagrees with connectivity of the total space");
  }
  return cov;
}

// n-th cup power of w: on an n-cell with ordered vertices v0..vn, the product
// of w over the edges v(i-1)v(i), each edge reached through face maps.
inline BitVector cup_power(const DeltaQuotient& q, const CoverCocycle& cov, int n) {
  const auto& cells = q.cells(n);
  BitVector out(cells.size());
  if (n == 0) {
    for (std::size_t i = 0; i < cells.size(); ++i) out.set(i);
    return out;
  }
  std::vector<std::uint8_t> value(cells.size(), 0);
  parallel_chunks(cells.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::uint8_t prod = 1;
      for (std::size_t j = 1; j <= static_cast<std::size_t>(n) && prod; ++j)
        prod &= cov.w[q.sub_cell(n, i, j - 1, j)];
      value[i] = prod;
    }
  });
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (value[i]) out.set(i);
  return out;
}

struct IndexResult {
  int h = 0;
  // ladder[n] = [w^n] != 0, for every n that was evaluated.
  std::vector<bool> ladder;
  std::vector<std::size_t> quotient_cells;
  CoverCocycle cover;
};

// [w^n] is tested by solving delta x = w^n, with delta the transpose of the
// quotient boundary. With `full_ladder` every degree up to dim X is
// evaluated and the ladder is checked to be monotone; otherwise evaluation
// stops at the first coboundary.
inline IndexResult cohomological_index_detail(const Z2Complex& x, bool full_ladder = false) {
  if (x.empty()) throw std::invalid_argument("cohomological index of the empty complex");
  IndexResult r;
  const DeltaQuotient q(x);
  r.quotient_cells = q.cell_counts();
  r.cover = cover_class(x, q);
  const ChainComplexGF2 cc = chain_complex(q);
  r.ladder.push_back(true);
  for (int n = 1; n <= q.dim(); ++n) {
    const BitVector power = cup_power(q, r.cover, n);
    const bool nonzero = power.any() && !solve(cc.boundary[static_cast<std::size_t>(n)].transpose(), power);
    r.ladder.push_back(nonzero);
    if (!nonzero && !full_ladder) break;
  }
  if (full_ladder && r.ladder.size() < static_cast<std::size_t>(q.dim() + 1))
    throw VerificationError("cup ladder incomplete");
  for (std::size_t n = 1; n < r.ladder.size(); ++n)
    if (r.ladder[n] && !r.ladder[n - 1]) throw VerificationError("cup-power ladder is not monotone");
  for (std::size_t n = 0; n < r.ladder.size(); ++n)
    if (r.ladder[n]) r.h = static_cast<int>(n);
  if ((r.h >= 1) != r.cover.class_nonzero())
    throw VerificationError("first cup power disagrees with the cover monodromy");
  return r;
}

inline int cohomological_index(const Z2Complex& x) { return cohomological_index_detail(x).h; }

struct SphereCertificate {
  int n = 0;
  bool sphere = false;  // GF(2)-homology n-sphere of dimension n
  bool tight = false;   // sphere and index equal to n
  std::vector<std::size_t> betti;
  std::optional<int> h;
};

inline std::vector<std::size_t> sphere_betti(int n) {
  if (n == 0) return {2};
  std::vector<std::size_t> b(static_cast<std::size_t>(n) + 1, 0);
  b.front() = b.back() = 1;
  return b;
}

inline SphereCertificate homology_sphere_certificate(const Z2Complex& x, int n) {
  SphereCertificate c;
  c.n = n;
  c.betti = betti(x);
  c.sphere = n >= 0 && x.dim() == n && c.betti == sphere_betti(n);
  if (c.sphere) {
    c.h = cohomological_index(x);
    c.tight = *c.h == n;
  }
  return c;
}

}  // namespace deljoin

#endif  // DELJOIN_INDEX_HPP
