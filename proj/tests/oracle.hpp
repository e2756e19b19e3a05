#ifndef DELJOIN_TESTS_ORACLE_HPP
#define DELJOIN_TESTS_ORACLE_HPP

// Slow, independent reimplementations used to cross-check the library.
// Everything here works on label sets and std::set columns; nothing reuses
// the bit-packed kernels or the quotient/cup machinery under test.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <deljoin/deljoin.hpp>

namespace oracle {

using LabelSet = std::set<std::string>;

inline std::set<LabelSet> label_simplices(const deljoin::SimplicialComplex& k) {
  std::set<LabelSet> out;
  k.for_each_simplex([&](const deljoin::Simplex& s) {
    const auto l = k.labels(s);
    out.insert(LabelSet(l.begin(), l.end()));
  });
  return out;
}

// Deleted join by 3-colouring the vertices: 0 = unused, 1 = copy 1, 2 = copy 2.
// A colouring contributes iff both colour classes are faces and one is nonempty.
inline std::set<LabelSet> deleted_join_by_colourings(const deljoin::SimplicialComplex& k) {
  const auto faces = label_simplices(k);
  auto is_face = [&](const LabelSet& s) { return s.empty() || faces.count(s) > 0; };
  const auto& vs = k.vertices();
  std::set<LabelSet> out;
  std::vector<int> colour(vs.size(), 0);
  while (true) {
    LabelSet a, b, joined;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (colour[i] == 1) {
        a.insert(vs[i]);
        joined.insert(vs[i] + "#1");
      } else if (colour[i] == 2) {
        b.insert(vs[i]);
        joined.insert(vs[i] + "#2");
      }
    }
    if (!joined.empty() && is_face(a) && is_face(b)) out.insert(joined);
    std::size_t i = 0;
    while (i < colour.size() && colour[i] == 2) colour[i++] = 0;
    if (i == colour.size()) break;
    ++colour[i];
  }
  return out;
}

// Sparse GF(2) columns as sorted sets of row indices.
using Column = std::set<std::size_t>;

inline void add_into(Column& target, const Column& c) {
  for (auto r : c)
    if (!target.erase(r)) target.insert(r);
}

// Plain column reduction by pivot = lowest row; returns the rank.
inline std::size_t rank(std::vector<Column> cols) {
  std::map<std::size_t, std::size_t> pivot_owner;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    while (!cols[j].empty()) {
      const std::size_t low = *cols[j].rbegin();
      auto it = pivot_owner.find(low);
      if (it == pivot_owner.end()) {
        pivot_owner[low] = j;
        ++r;
        break;
      }
      add_into(cols[j], cols[it->second]);
    }
  }
  return r;
}

inline std::vector<Column> columns_of(const deljoin::GF2Matrix& a) {
  std::vector<Column> cols(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) cols[j].insert(i);
  return cols;
}

// Kernel basis of a column matrix, each kernel vector a set of column indices.
inline std::vector<Column> kernel(std::vector<Column> cols) {
  std::vector<Column> record(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) record[j] = {j};
  std::map<std::size_t, std::size_t> pivot_owner;
  std::vector<Column> out;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    while (!cols[j].empty()) {
      const std::size_t low = *cols[j].rbegin();
      auto it = pivot_owner.find(low);
      if (it == pivot_owner.end()) break;
      add_into(cols[j], cols[it->second]);
      add_into(record[j], record[it->second]);
    }
    if (cols[j].empty())
      out.push_back(record[j]);
    else
      pivot_owner[*cols[j].rbegin()] = j;
  }
  return out;
}

// Betti numbers of a simplicial complex over GF(2), by label sets.
inline std::vector<std::size_t> betti(const deljoin::SimplicialComplex& k) {
  std::vector<std::vector<LabelSet>> by_dim(static_cast<std::size_t>(k.dim() + 1));
  for (const auto& s : label_simplices(k)) by_dim[s.size() - 1].push_back(s);
  std::vector<std::size_t> ranks(by_dim.size() + 1, 0);
  for (std::size_t d = 1; d < by_dim.size(); ++d) {
    std::map<LabelSet, std::size_t> row;
    for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i) row[by_dim[d - 1][i]] = i;
    std::vector<Column> cols;
    for (const auto& s : by_dim[d]) {
      Column c;
      for (const auto& v : s) {
        LabelSet f = s;
        f.erase(v);
        c.insert(row.at(f));
      }
      cols.push_back(c);
    }
    ranks[d] = rank(cols);
  }
  std::vector<std::size_t> b;
  for (std::size_t d = 0; d < by_dim.size(); ++d) b.push_back(by_dim[d].size() - ranks[d] - ranks[d + 1]);
  return b;
}

// Z2-index by pairing: [w^n] != 0 iff w^n is nonzero on some n-cycle of the
// quotient. Orbits are ordered by their larger label, and the sheet-0
// member of an orbit is its larger label; both differ from the library.
struct IndexOracle {
  int h = 0;
  std::vector<bool> ladder;
};

inline IndexOracle index_by_pairing(const deljoin::Z2Complex& x) {
  const auto& k = x.complex();
  const std::size_t nv = k.vertex_count();
  std::vector<std::string> orbit_key(nv);
  std::vector<int> sheet(nv);
  for (deljoin::VertexId v = 0; v < nv; ++v) {
    const std::string& a = k.label(v);
    const std::string& b = k.label(x.partner(v));
    orbit_key[v] = std::max(a, b);
    sheet[v] = a > b ? 0 : 1;
  }

  // Quotient cells keyed by the smaller (as a label set) of the two lifts;
  // vertices of the stored lift are sorted by orbit key.
  std::map<std::string, std::string> partner_label;
  for (deljoin::VertexId v = 0; v < nv; ++v) partner_label[k.label(v)] = k.label(x.partner(v));
  auto canonical = [&](const LabelSet& s) {
    LabelSet t;
    for (const auto& l : s) t.insert(partner_label.at(l));
    return std::min(s, t);
  };
  struct Cell {
    std::vector<deljoin::VertexId> ordered;
  };
  std::vector<std::map<LabelSet, Cell>> cells(static_cast<std::size_t>(k.dim() + 1));
  k.for_each_simplex([&](const deljoin::Simplex& s) {
    const auto l = k.labels(s);
    const LabelSet key = canonical(LabelSet(l.begin(), l.end()));
    auto& level = cells[s.size() - 1];
    if (level.count(key)) return;
    Cell c{{s.begin(), s.end()}};
    std::sort(c.ordered.begin(), c.ordered.end(),
              [&](deljoin::VertexId a, deljoin::VertexId b) { return orbit_key[a] < orbit_key[b]; });
    level.emplace(key, c);
  });

  IndexOracle out;
  out.ladder.push_back(true);
  for (std::size_t n = 1; n < cells.size(); ++n) {
    std::map<LabelSet, std::size_t> row;
    std::size_t i = 0;
    for (const auto& [key, c] : cells[n - 1]) row[key] = i++;
    std::vector<Column> cols;
    std::vector<bool> wn;
    for (const auto& [key, c] : cells[n]) {
      Column col;
      for (const auto& drop : key) {
        auto f = key;
        f.erase(drop);
        col.insert(row.at(canonical(f)));
      }
      cols.push_back(col);
      bool value = true;
      for (std::size_t j = 1; j < c.ordered.size(); ++j) value = value && sheet[c.ordered[j - 1]] != sheet[c.ordered[j]];
      wn.push_back(value);
    }
    bool nonzero = false;
    for (const auto& z : kernel(cols)) {
      bool pairing = false;
      for (auto j : z) pairing ^= wn[j];
      if (pairing) {
        nonzero = true;
        break;
      }
    }
    out.ladder.push_back(nonzero);
  }
  for (std::size_t n = 0; n < out.ladder.size(); ++n)
    if (out.ladder[n]) out.h = static_cast<int>(n);
  return out;
}

// Random complex: a few random facets on up to `max_vertices` vertices.
inline deljoin::SimplicialComplex random_complex(std::mt19937& rng, int max_vertices, const std::string& name) {
  std::uniform_int_distribution<int> nv_dist(2, max_vertices);
  const int nv = nv_dist(rng);
  std::uniform_int_distribution<int> facet_count(1, 6);
  std::uniform_int_distribution<int> facet_size(1, std::min(nv, 4));
  std::vector<std::string> labels;
  for (int i = 0; i < nv; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<deljoin::Simplex> facets;
  const int m = facet_count(rng);
  for (int f = 0; f < m; ++f) {
    std::vector<deljoin::VertexId> all(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) all[static_cast<std::size_t>(i)] = static_cast<deljoin::VertexId>(i);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(facet_size(rng)));
    facets.push_back(all);
  }
  return deljoin::SimplicialComplex::from_simplices(name, labels, facets, true);
}

}  // namespace oracle

#endif  // DELJOIN_TESTS_ORACLE_HPP
