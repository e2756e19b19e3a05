#ifndef DELJOIN_Z2COMPLEX_HPP
#define DELJOIN_Z2COMPLEX_HPP

#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"

namespace deljoin {

// A simplicial complex with a free simplicial involution on its vertices.
// Construction validates every invariant and throws FreenessError otherwise.
class Z2Complex {
 public:
  Z2Complex() = default;

  Z2Complex(SimplicialComplex complex, std::vector<VertexId> involution)
      : complex_(std::move(complex)), involution_(std::move(involution)) {
    validate();
  }

  static Z2Complex from_orbits(SimplicialComplex complex,
                               const std::vector<std::pair<std::string, std::string>>& orbits) {
    const std::size_t n = complex.vertex_count();
    constexpr VertexId kUnset = static_cast<VertexId>(-1);
    std::vector<VertexId> t(n, kUnset);
    for (const auto& [a, b] : orbits) {
      const VertexId u = complex.vertex(a);
      const VertexId v = complex.vertex(b);
      if (t[u] != kUnset || t[v] != kUnset)
        throw FreenessError("vertex listed in more than one orbit: " + a + " / " + b);
      t[u] = v;
      t[v] = u;
    }
    for (VertexId v = 0; v < n; ++v)
      if (t[v] == kUnset) throw FreenessError("vertex '" + complex.label(v) + "' has no involution partner");
    return Z2Complex(std::move(complex), std::move(t));
  }

  const SimplicialComplex& complex() const { return complex_; }
  const std::string& name() const { return complex_.name(); }
  int dim() const { return complex_.dim(); }
  bool empty() const { return complex_.empty(); }
  VertexId partner(VertexId v) const { return involution_.at(v); }
  const std::vector<VertexId>& involution() const { return involution_; }

  Simplex apply(const Simplex& s) const {
    Simplex t;
    t.reserve(s.size());
    for (auto v : s) t.push_back(involution_[v]);
    std::sort(t.begin(), t.end());
    return t;
  }

  // Orbits as (smaller label, larger label), sorted.
  std::vector<std::pair<std::string, std::string>> orbits() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (VertexId v = 0; v < involution_.size(); ++v)
      if (v < involution_[v]) out.emplace_back(complex_.label(v), complex_.label(involution_[v]));
    return out;
  }

  Z2Complex renamed(std::string name) const {
    Z2Complex z = *this;
    z.complex_ = complex_.renamed(std::move(name));
    return z;
  }

  bool operator==(const Z2Complex& other) const {
    return complex_ == other.complex_ && involution_ == other.involution_;
  }

 private:
  void validate() const {
    const std::size_t n = complex_.vertex_count();
    if (involution_.size() != n) throw FreenessError("involution size does not match vertex count");
    for (VertexId v = 0; v < n; ++v) {
      const VertexId w = involution_[v];
      if (w >= n) throw FreenessError("involution maps outside the vertex set");
      if (w == v) throw FreenessError("involution fixes vertex '" + complex_.label(v) + "'");
      if (involution_[w] != v) throw FreenessError("involution is not self-inverse at '" + complex_.label(v) + "'");
    }
    complex_.for_each_simplex([&](const Simplex& s) {
      for (auto v : s)
        if (std::binary_search(s.begin(), s.end(), involution_[v]))
          throw FreenessError("simplex " + complex_.describe(s) + " contains a vertex and its partner");
      if (!complex_.contains(apply(s)))
        throw FreenessError("involution is not simplicial: image of " + complex_.describe(s) + " missing");
    });
  }

  SimplicialComplex complex_;
  std::vector<VertexId> involution_;
};

// Boundary of the (n+1)-dimensional cross-polytope with the antipodal map:
// vertices a_i, b_i for 0 <= i <= n, simplices avoid every pair {a_i, b_i}.
inline Z2Complex cross_polytope_boundary(int n) {
  if (n < 0) throw std::invalid_argument("cross_polytope_boundary requires n >= 0");
  if (n > 20) throw CapExceeded("cross_polytope_boundary: n too large");
  std::size_t total = 1;
  for (int i = 0; i <= n; ++i) total *= 3;
  check_cap(total - 1, "cross_polytope_boundary");
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("b" + std::to_string(i));
  }
  // Label ids before sorting: a_i = 2i, b_i = 2i+1.
  std::vector<Simplex> simplices;
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t c = code;
    Simplex s;
    for (int i = 0; i <= n; ++i, c /= 3) {
      if (c % 3 == 1) s.push_back(static_cast<VertexId>(2 * i));
      if (c % 3 == 2) s.push_back(static_cast<VertexId>(2 * i + 1));
    }
    simplices.push_back(std::move(s));
  }
  auto k = SimplicialComplex::from_simplices("crosspoly:" + std::to_string(n), std::move(labels),
                                             std::move(simplices), false);
  std::vector<std::pair<std::string, std::string>> orbits;
  for (int i = 0; i <= n; ++i) orbits.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
  return Z2Complex::from_orbits(std::move(k), orbits);
}

}  // namespace deljoin

#endif  // DELJOIN_Z2COMPLEX_HPP
