#ifndef DELJOIN_HOMOLOGY_HPP
#define DELJOIN_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "complex.hpp"
#include "deleted.hpp"
#include "gf2.hpp"
#include "z2complex.hpp"

namespace deljoin {

inline ChainComplexGF2 chain_complex(const SimplicialComplex& k) {
  ChainComplexGF2 cc;
  cc.cells = k.f_vector();
  for (int d = 0; d <= k.dim(); ++d) {
    const auto& level = k.simplices(d);
    GF2Matrix m(d == 0 ? 0 : k.simplices(d - 1).size(), level.size());
    if (d > 0)
      for (std::size_t j = 0; j < level.size(); ++j)
        for (std::size_t i = 0; i < level[j].size(); ++i) m.flip(*k.index_of(without_index(level[j], i)), j);
    cc.boundary.push_back(std::move(m));
  }
  return cc;
}

inline ChainComplexGF2 chain_complex(const Z2Complex& x) { return chain_complex(x.complex()); }

inline ChainComplexGF2 chain_complex(const CellComplex& x) {
  ChainComplexGF2 cc;
  cc.cells = x.cell_counts();
  for (int d = 0; d <= x.dim(); ++d) {
    GF2Matrix m(d == 0 ? 0 : x.cells(d - 1).size(), x.cells(d).size());
    if (d > 0)
      for (std::size_t j = 0; j < x.cells(d).size(); ++j)
        for (auto i : x.boundary(d, j)) m.flip(i, j);
    cc.boundary.push_back(std::move(m));
  }
  return cc;
}

template <class Source>
std::vector<std::size_t> betti(const Source& source) {
  return chain_complex(source).betti();
}

// Betti numbers of the unreduced suspension, from those of the space.
// The empty space suspends to S^0.
inline std::vector<std::size_t> suspension_betti(const std::vector<std::size_t>& b) {
  if (b.empty() || b[0] == 0) return {2};
  std::vector<std::size_t> out{1, b[0] - 1};
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

inline std::vector<std::size_t> trim_trailing_zeros(std::vector<std::size_t> b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

struct ConeCollapseReport {
  std::vector<std::size_t> quotient_betti;    // of (Con K)x2 with c x K and K x c collapsed
  std::vector<std::size_t> suspension_betti;  // of the suspension of K x2
  std::size_t collapsed_first = 0;            // cells of c x K
  std::size_t collapsed_second = 0;           // cells of K x c
  bool subcomplexes_ok = false;  // both closed, disjoint, swapped by the involution
  bool match = false;
  std::string detail;
};

// Homology of the deleted product of the cone with the two preimage
// subcomplexes {c} x K and K x {c} each collapsed to a point, against the
// homology of the suspension of the deleted product of K.
inline ConeCollapseReport cone_collapse_report(const SimplicialComplex& k) {
  if (k.empty()) throw std::invalid_argument("cone_collapse_report needs a nonempty complex");
  ConeCollapseReport r;
  const SimplicialComplex con = cone(k);
  const CellComplex x = deleted_product(con);
  const Simplex apex{con.vertex("c")};

  // 0 = ordinary cell, 1 = in c x K, 2 = in K x c.
  std::vector<std::vector<int>> side(static_cast<std::size_t>(x.dim() + 1));
  for (int d = 0; d <= x.dim(); ++d) {
    auto& s = side[static_cast<std::size_t>(d)];
    s.assign(x.cells(d).size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto& c = x.cells(d)[i];
      if (c.first == apex) s[i] = 1;
      if (c.second == apex) s[i] = s[i] ? 3 : 2;
      if (s[i] == 1) ++r.collapsed_first;
      if (s[i] == 2) ++r.collapsed_second;
    }
  }

  r.subcomplexes_ok = r.collapsed_first == k.simplex_count() && r.collapsed_second == k.simplex_count();
  for (int d = 0; d <= x.dim() && r.subcomplexes_ok; ++d)
    for (std::size_t i = 0; i < x.cells(d).size() && r.subcomplexes_ok; ++i) {
      const int s = side[static_cast<std::size_t>(d)][i];
      if (s == 3) r.subcomplexes_ok = false;
      if (s == 0) continue;
      const std::size_t j = x.swap_index(d, i);
      if (side[static_cast<std::size_t>(d)][j] != 3 - s) r.subcomplexes_ok = false;
      if (d > 0)
        for (auto f : x.boundary(d, i))
          if (side[static_cast<std::size_t>(d - 1)][f] != s) r.subcomplexes_ok = false;
    }
  if (!r.subcomplexes_ok) {
    r.detail = "preimage subcomplexes are not closed, disjoint and swapped";
    return r;
  }

  // Cellular chain complex of the quotient: surviving cells, plus two new
  // 0-cells standing for the collapsed subcomplexes (indices 0 and 1).
  ChainComplexGF2 q;
  std::vector<std::vector<std::size_t>> new_index(side.size());
  for (int d = 0; d <= x.dim(); ++d) {
    std::size_t next = d == 0 ? 2 : 0;
    auto& idx = new_index[static_cast<std::size_t>(d)];
    idx.assign(x.cells(d).size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (side[static_cast<std::size_t>(d)][i] == 0) idx[i] = next++;
    q.cells.push_back(next);
  }
  for (int d = 0; d <= x.dim(); ++d) {
    GF2Matrix m(d == 0 ? 0 : q.cells[static_cast<std::size_t>(d - 1)], q.cells[static_cast<std::size_t>(d)]);
    if (d > 0)
      for (std::size_t i = 0; i < x.cells(d).size(); ++i) {
        const std::size_t col = new_index[static_cast<std::size_t>(d)][i];
        if (col == static_cast<std::size_t>(-1)) continue;
        for (auto f : x.boundary(d, i)) {
          const int s = side[static_cast<std::size_t>(d - 1)][f];
          if (s == 0)
            m.flip(new_index[static_cast<std::size_t>(d - 1)][f], col);
          else if (d == 1)
            m.flip(static_cast<std::size_t>(s - 1), col);
        }
      }
    q.boundary.push_back(std::move(m));
  }
  q.validate();
  if (auto bad = q.first_nonzero_square())
    throw VerificationError("collapsed chain complex has nonzero square boundary in degree " + std::to_string(*bad));

  r.quotient_betti = trim_trailing_zeros(q.betti());
  r.suspension_betti = trim_trailing_zeros(suspension_betti(betti(detail::deleted_product_any(k))));
  r.match = r.quotient_betti == r.suspension_betti;
  r.detail = r.match ? "quotient homology equals suspension homology" : "quotient and suspension homology differ";
  return r;
}

}  // namespace deljoin

#endif  // DELJOIN_HOMOLOGY_HPP
