#ifndef DELJOIN_DELETED_HPP
#define DELJOIN_DELETED_HPP

// Deleted joins (simplicial), deleted products (cellular), the join of
// Z2-complexes, and the decomposition isomorphism of a deleted join of joins.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "z2complex.hpp"

namespace deljoin {

// sigma#1 u tau#2 over disjoint faces sigma, tau of K (either may be empty,
// not both). Vertex v of K yields "v#1" and "v#2"; the involution swaps them.
inline Z2Complex deleted_join(const SimplicialComplex& k) {
  if (k.empty()) throw std::invalid_argument("deleted_join of the empty complex");
  std::vector<std::string> labels;
  labels.reserve(2 * k.vertex_count());
  for (const auto& v : k.vertices()) {
    labels.push_back(v + "#1");
    labels.push_back(v + "#2");
  }

  std::vector<Simplex> faces{Simplex{}};
  k.for_each_simplex([&](const Simplex& s) { faces.push_back(s); });

  // Copy 1 of vertex v has id 2v, copy 2 has id 2v+1 (before label sorting).
  const std::size_t chunks = chunk_count(faces.size());
  std::vector<std::vector<Simplex>> parts(chunks);
  parallel_chunks(faces.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    auto& out = parts[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      const Simplex& a = faces[i];
      for (const Simplex& b : faces) {
        if ((a.empty() && b.empty()) || !disjoint(a, b)) continue;
        Simplex s;
        s.reserve(a.size() + b.size());
        for (auto v : a) s.push_back(2 * v);
        for (auto v : b) s.push_back(2 * v + 1);
        out.push_back(std::move(s));
        if (out.size() > cell_cap()) check_cap(out.size(), "deleted_join");
      }
    }
  });
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  check_cap(total, "deleted_join");
  std::vector<Simplex> simplices;
  simplices.reserve(total);
  for (auto& p : parts)
    for (auto& s : p) simplices.push_back(std::move(s));

  auto complex = SimplicialComplex::from_simplices("deljoin(" + k.name() + ")", std::move(labels),
                                                   std::move(simplices), false);
  std::vector<std::pair<std::string, std::string>> orbits;
  for (const auto& v : k.vertices()) orbits.emplace_back(v + "#1", v + "#2");
  return Z2Complex::from_orbits(std::move(complex), orbits);
}

// A cell of a deleted product: an ordered pair of disjoint nonempty simplices.
struct ProductCell {
  Simplex first;
  Simplex second;

  int dim() const { return static_cast<int>(first.size() + second.size()) - 2; }
  auto operator<=>(const ProductCell&) const = default;
};

// Polytopal cell complex of ordered pairs of disjoint simplices, with GF(2)
// boundary sum_{faces s' of s} (s', t) + sum_{faces t' of t} (s, t') and the
// swap involution (s, t) -> (t, s).
class CellComplex {
 public:
  CellComplex() = default;
  CellComplex(SimplicialComplex source, std::vector<std::vector<ProductCell>> cells)
      : source_(std::move(source)), cells_(std::move(cells)) {
    for (auto& level : cells_) std::sort(level.begin(), level.end());
    for (int d = 0; d <= dim(); ++d)
      for (const auto& c : this->cells(d)) {
        if (c.first.empty() || c.second.empty() || !disjoint(c.first, c.second))
          throw VerificationError("deleted product cell is not a pair of disjoint nonempty simplices");
        if (c.first == c.second) throw VerificationError("deleted product cell fixed by the swap");
      }
  }

  const SimplicialComplex& source() const { return source_; }
  std::string name() const { return "delprod(" + source_.name() + ")"; }
  int dim() const { return static_cast<int>(cells_.size()) - 1; }

  const std::vector<ProductCell>& cells(int d) const {
    static const std::vector<ProductCell> kNone;
    if (d < 0 || d > dim()) return kNone;
    return cells_[static_cast<std::size_t>(d)];
  }

  std::vector<std::size_t> cell_counts() const {
    std::vector<std::size_t> out;
    for (const auto& level : cells_) out.push_back(level.size());
    return out;
  }

  std::size_t cell_count() const {
    std::size_t n = 0;
    for (const auto& level : cells_) n += level.size();
    return n;
  }

  std::optional<std::size_t> index_of(const ProductCell& c) const {
    const auto& level = cells(c.dim());
    auto it = std::lower_bound(level.begin(), level.end(), c);
    if (it == level.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
  }

  std::size_t swap_index(int d, std::size_t i) const {
    const auto& c = cells(d).at(i);
    auto j = index_of({c.second, c.first});
    if (!j) throw VerificationError("deleted product is not closed under the swap");
    return *j;
  }

  // Indices (in dimension d-1) of the codimension-one faces of cell (d, i).
  std::vector<std::size_t> boundary(int d, std::size_t i) const {
    const auto& c = cells(d).at(i);
    std::vector<std::size_t> out;
    auto push = [&](ProductCell face) {
      if (face.first.empty() || face.second.empty()) return;
      auto j = index_of(face);
      if (!j) throw VerificationError("deleted product face missing");
      out.push_back(*j);
    };
    if (c.first.size() > 1)
      for (std::size_t r = 0; r < c.first.size(); ++r) push({without_index(c.first, r), c.second});
    if (c.second.size() > 1)
      for (std::size_t r = 0; r < c.second.size(); ++r) push({c.first, without_index(c.second, r)});
    return out;
  }

  std::string describe(const ProductCell& c) const {
    return "(" + source_.describe(c.first) + "," + source_.describe(c.second) + ")";
  }

 private:
  SimplicialComplex source_;
  std::vector<std::vector<ProductCell>> cells_;
};

namespace detail {

inline CellComplex deleted_product_any(const SimplicialComplex& k) {
  std::vector<Simplex> faces;
  k.for_each_simplex([&](const Simplex& s) { faces.push_back(s); });
  const std::size_t chunks = chunk_count(faces.size());
  std::vector<std::vector<ProductCell>> parts(chunks);
  parallel_chunks(faces.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    auto& out = parts[chunk];
    for (std::size_t i = begin; i < end; ++i)
      for (const Simplex& b : faces)
        if (disjoint(faces[i], b)) {
          out.push_back({faces[i], b});
          if (out.size() > cell_cap()) check_cap(out.size(), "deleted_product");
        }
  });
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  check_cap(total, "deleted_product");
  std::vector<std::vector<ProductCell>> cells;
  for (auto& p : parts)
    for (auto& c : p) {
      const auto d = static_cast<std::size_t>(c.dim());
      if (cells.size() <= d) cells.resize(d + 1);
      cells[d].push_back(std::move(c));
    }
  return CellComplex(k, std::move(cells));
}

}  // namespace detail

inline CellComplex deleted_product(const SimplicialComplex& k) {
  if (k.vertex_count() < 2) throw std::invalid_argument("deleted_product needs at least 2 vertices");
  return detail::deleted_product_any(k);
}

// Join of the underlying complexes ("K/x", "L/y") with the involution acting
// on each side.
inline Z2Complex z2_join(const Z2Complex& x, const Z2Complex& y) {
  auto joined = join(x.complex(), y.complex()).renamed("z2join(" + x.name() + "," + y.name() + ")");
  std::vector<std::pair<std::string, std::string>> orbits;
  for (const auto& [a, b] : x.orbits()) orbits.emplace_back("K/" + a, "K/" + b);
  for (const auto& [a, b] : y.orbits()) orbits.emplace_back("L/" + a, "L/" + b);
  return Z2Complex::from_orbits(std::move(joined), orbits);
}

struct JoinDecompositionReport {
  bool pass = false;
  // (K*L)*2 label -> (K*2)*(L*2) label.
  std::vector<std::pair<std::string, std::string>> bijection;
  std::vector<std::size_t> lhs_f_vector;
  std::vector<std::size_t> rhs_f_vector;
  std::string detail;
  Z2Complex lhs;  // deleted_join(join(K, L))
  Z2Complex rhs;  // z2_join(deleted_join(K), deleted_join(L))
};

// Builds both sides of (K*L)*2 = K*2 * L*2 and checks the vertex bijection
// (s/v)#c -> s/(v#c) is a simplicial isomorphism commuting with the swaps.
inline JoinDecompositionReport verify_join_decomposition(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.empty() || l.empty()) throw std::invalid_argument("verify_join_decomposition needs nonempty complexes");
  JoinDecompositionReport r;
  r.lhs = deleted_join(join(k, l));
  r.rhs = z2_join(deleted_join(k), deleted_join(l));
  r.lhs_f_vector = r.lhs.complex().f_vector();
  r.rhs_f_vector = r.rhs.complex().f_vector();

  const auto& lhs = r.lhs.complex();
  const auto& rhs = r.rhs.complex();
  std::vector<VertexId> f(lhs.vertex_count(), 0);
  std::vector<bool> hit(rhs.vertex_count(), false);
  auto add = [&](const std::string& side, const std::string& v, const char* copy) {
    const std::string from = side + "/" + v + "#" + copy;  // copy of a join vertex
    const std::string to = side + "/" + (v + "#" + copy);  // side of a deleted-join vertex
    r.bijection.emplace_back(from, to);
    const VertexId a = lhs.vertex(from);
    const VertexId b = rhs.vertex(to);
    f[a] = b;
    hit[b] = true;
  };
  for (const auto& v : k.vertices())
    for (const char* c : {"1", "2"}) add("K", v, c);
  for (const auto& v : l.vertices())
    for (const char* c : {"1", "2"}) add("L", v, c);

  if (lhs.vertex_count() != rhs.vertex_count() || r.bijection.size() != lhs.vertex_count() ||
      std::find(hit.begin(), hit.end(), false) != hit.end()) {
    r.detail = "vertex map is not a bijection";
    return r;
  }
  if (r.lhs_f_vector != r.rhs_f_vector) {
    r.detail = "face vectors differ";
    return r;
  }
  for (VertexId v = 0; v < lhs.vertex_count(); ++v)
    if (f[r.lhs.partner(v)] != r.rhs.partner(f[v])) {
      r.detail = "bijection does not commute with the involutions at " + lhs.label(v);
      return r;
    }
  bool ok = true;
  lhs.for_each_simplex([&](const Simplex& s) {
    if (!ok) return;
    Simplex image;
    for (auto v : s) image.push_back(f[v]);
    std::sort(image.begin(), image.end());
    if (!rhs.contains(image)) {
      ok = false;
      r.detail = "image of " + lhs.describe(s) + " is not a simplex";
    }
  });
  if (!ok) return r;
  r.pass = true;
  r.detail = "equivariant simplicial isomorphism on " + std::to_string(lhs.simplex_count()) + " simplices";
  return r;
}

}  // namespace deljoin

#endif  // DELJOIN_DELETED_HPP
