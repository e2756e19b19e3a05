#ifndef DELJOIN_GF2_HPP
#define DELJOIN_GF2_HPP

// Linear algebra over the two-element field: packed bit vectors, dense
// bit-packed matrices, rank and linear solves, and chain complexes.

#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "common.hpp"

namespace deljoin {

class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits) {}

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const word_type* data() const { return words_.data(); }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const word_type mask = word_type{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  // this ^= other, touching only words from `from_word` on.
  void xor_with(const BitVector& other, std::size_t from_word = 0) {
    for (std::size_t w = from_word; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from = 0) const {
    if (from >= size_) return size_;
    std::size_t w = from / kWordBits;
    word_type cur = words_[w] & (~word_type{0} << (from % kWordBits));
    while (true) {
      if (cur) return std::min(size_, w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
      if (++w >= words_.size()) return size_;
      cur = words_[w];
    }
  }

  // Parity of popcount(this & other).
  bool dot(const BitVector& other) const {
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static GF2Matrix identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  static GF2Matrix from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    GF2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c)
        if (rows[r][c] & 1) m.set(r, c);
    }
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }

  GF2Matrix transpose() const {
    GF2Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = rows_[r].find_next(0); c < cols_; c = rows_[r].find_next(c + 1))
        t.set(c, r);
    return t;
  }

  GF2Matrix operator*(const GF2Matrix& rhs) const {
    if (cols_ != rhs.rows()) throw std::invalid_argument("GF2Matrix product: dimension mismatch");
    GF2Matrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t k = rows_[r].find_next(0); k < cols_; k = rows_[r].find_next(k + 1))
        out.rows_[r].xor_with(rhs.rows_[k]);
    return out;
  }

  BitVector apply(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("GF2Matrix apply: dimension mismatch");
    BitVector y(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      if (rows_[r].dot(x)) y.set(r);
    return y;
  }

  bool is_zero() const {
    for (const auto& r : rows_)
      if (r.any()) return false;
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.count();
    return n;
  }

  bool operator==(const GF2Matrix&) const = default;

  // "rows cols" header, then one line of 0/1 characters per row.
  void dump(std::ostream& os) const {
    os << rows() << ' ' << cols_ << '\n';
    std::string line(cols_, '0');
    for (const auto& r : rows_) {
      for (std::size_t c = 0; c < cols_; ++c) line[c] = r.get(c) ? '1' : '0';
      os << line << '\n';
    }
  }

  static GF2Matrix parse(std::istream& is) {
    std::size_t r = 0, c = 0;
    if (!(is >> r >> c)) throw std::invalid_argument("matrix dump: bad header");
    GF2Matrix m(r, c);
    std::string line;
    for (std::size_t i = 0; i < r; ++i) {
      if (!(is >> line) || line.size() != c) throw std::invalid_argument("matrix dump: bad row");
      for (std::size_t j = 0; j < c; ++j) {
        if (line[j] == '1')
          m.set(i, j);
        else if (line[j] != '0')
          throw std::invalid_argument("matrix dump: expected 0/1");
      }
    }
    return m;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

namespace detail {

// Echelon basis keyed by leading column. Rows are inserted one at a time and
// reduced against existing pivots; only words at or after the current leading
// column are touched, since everything before it is already zero.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : pivot_of_col_(cols, kNone) {}

  // Returns true if the row was independent of the basis. `rhs` rides along
  // with the row and is reduced in step.
  bool insert(BitVector row, bool& rhs) {
    std::size_t lead = row.find_next(0);
    while (lead < row.size()) {
      const std::size_t p = pivot_of_col_[lead];
      if (p == kNone) {
        pivot_of_col_[lead] = basis_.size();
        basis_.push_back(std::move(row));
        rhs_.push_back(rhs);
        leads_.push_back(lead);
        return true;
      }
      row.xor_with(basis_[p], lead / BitVector::kWordBits);
      rhs ^= rhs_[p];
      lead = row.find_next(lead + 1);
    }
    return false;
  }

  std::size_t rank() const { return basis_.size(); }

  // Back substitution: free variables are zero.
  BitVector particular_solution() const {
    BitVector x(pivot_of_col_.size());
    std::vector<std::size_t> order(basis_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return leads_[a] > leads_[b]; });
    for (std::size_t i : order) {
      const bool value = rhs_[i] ^ basis_[i].dot(x);
      if (value) x.set(leads_[i]);
    }
    return x;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_of_col_;
  std::vector<BitVector> basis_;
  std::vector<bool> rhs_;
  std::vector<std::size_t> leads_;
};

}  // namespace detail

inline std::size_t rank(const GF2Matrix& a) {
  detail::EchelonBasis basis(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    bool dummy = false;
    basis.insert(a.row(r), dummy);
    if (basis.rank() == std::min(a.rows(), a.cols())) break;
  }
  return basis.rank();
}

// Any x with a*x = b, or nullopt when the system is inconsistent.
inline std::optional<BitVector> solve(const GF2Matrix& a, const BitVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  detail::EchelonBasis basis(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    bool rhs = b.get(r);
    if (!basis.insert(a.row(r), rhs) && rhs) return std::nullopt;
  }
  return basis.particular_solution();
}

// Cellular chain complex over GF(2). boundary[i] is the matrix of the
// boundary map from i-cells to (i-1)-cells: rows index (i-1)-cells, columns
// index i-cells. boundary[0] is the 0 x cells[0] zero map.
struct ChainComplexGF2 {
  std::vector<std::size_t> cells;
  std::vector<GF2Matrix> boundary;

  int top_dim() const { return static_cast<int>(cells.size()) - 1; }

  void validate() const {
    if (boundary.size() != cells.size()) throw VerificationError("chain complex: boundary count mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::size_t expect_rows = i == 0 ? 0 : cells[i - 1];
      if (boundary[i].rows() != expect_rows || boundary[i].cols() != cells[i])
        throw VerificationError("chain complex: boundary " + std::to_string(i) + " has wrong shape");
    }
  }

  // First degree i with boundary[i-1] * boundary[i] != 0, or nullopt.
  std::optional<int> first_nonzero_square() const {
    for (std::size_t i = 2; i < cells.size(); ++i)
      if (!(boundary[i - 1] * boundary[i]).is_zero()) return static_cast<int>(i);
    return std::nullopt;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i < cells.size(); ++i)
      chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(cells[i]);
    return chi;
  }

  // Unreduced Betti numbers; throws if the Euler identity fails.
  std::vector<std::size_t> betti() const {
    std::vector<std::size_t> ranks(cells.size() + 1, 0);
    for (std::size_t i = 1; i < cells.size(); ++i) ranks[i] = rank(boundary[i]);
    std::vector<std::size_t> b(cells.size());
    long long chi_b = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      b[i] = cells[i] - ranks[i] - ranks[i + 1];
      chi_b += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(b[i]);
    }
    if (chi_b != euler_characteristic())
      throw VerificationError("Euler characteristic disagrees with Betti numbers");
    return b;
  }
};

inline long long euler_of_betti(const std::vector<std::size_t>& b) {
  long long chi = 0;
  for (std::size_t i = 0; i < b.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(b[i]);
  return chi;
}

}  // namespace deljoin

#endif  // DELJOIN_GF2_HPP
