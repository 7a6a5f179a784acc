#include "radgeo/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace radgeo {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& grid) {
  const std::size_t r = grid.size();
  const std::size_t c = r ? grid.front().size() : 0;
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (grid[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, grid[i][j] & 1);
  }
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  auto& w = row(r)[c >> 6];
  const auto bit = std::uint64_t{1} << (c & 63);
  w = v ? (w | bit) : (w & ~bit);
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](auto w) { return w == 0; });
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

namespace {

// In-place row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t w = m.words_per_row();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    if (p != r) std::swap_ranges(m.row(p), m.row(p) + w, m.row(r));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || !m.get(i, c)) continue;
      auto* dst = m.row(i);
      const auto* src = m.row(r);
      for (std::size_t k = c >> 6; k < w; ++k) dst[k] ^= src[k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t BitMatrix::rank() const {
  BitMatrix m = rows_ <= cols_ ? *this : transpose();
  return echelon(m).size();
}

BitMatrix BitMatrix::nullspace() const {
  BitMatrix m = *this;
  const auto pivots = echelon(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  BitMatrix basis(free_cols.size(), cols_);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    basis.set(k, f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (m.get(r, f)) basis.set(k, pivots[r]);
  }
  return basis;
}

std::string BitMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (get(i, j) ? 1 : 0);
    os << '\n';
  }
  return os.str();
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
  BitMatrix c(a.rows(), b.cols());
  const std::size_t w = b.words_per_row();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a.get(i, k)) {
        const auto* src = b.row(k);
        auto* dst = c.row(i);
        for (std::size_t t = 0; t < w; ++t) dst[t] ^= src[t];
      }
  return c;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch in sum");
  BitMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.words_per_row(); ++t) c.row(i)[t] ^= b.row(i)[t];
  return c;
}

std::uint64_t apply_to_column(const BitMatrix& a, std::uint64_t v) {
  if (a.cols() > 64) throw std::invalid_argument("apply_to_column needs at most 64 columns");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (std::popcount(a.row(i)[0] & v) & 1) out |= std::uint64_t{1} << i;
  return out;
}

std::vector<BitMatrix> reference_nilpotents() {
  // entries (row, col), 1-based, of each N_i
  const std::vector<std::vector<std::pair<int, int>>> entries = {
      {{1, 3}, {2, 4}},
      {{1, 3}, {1, 4}, {2, 3}},
      {{1, 4}, {2, 3}, {2, 4}},
      {{1, 4}, {2, 3}},
      {{1, 3}, {1, 4}, {2, 4}},
      {{1, 3}, {2, 3}, {2, 4}},
      {{1, 2}, {3, 4}},
      {{1, 2}, {1, 4}, {3, 4}},
      {{1, 2}, {1, 3}, {2, 4}, {3, 4}},
      {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}},
  };
  std::vector<BitMatrix> out;
  for (const auto& e : entries) {
    BitMatrix n(4, 4);
    for (auto [r, c] : e) n.set(r - 1, c - 1);
    out.push_back(n);
  }
  return out;
}

std::vector<BitMatrix> enumerate_rank2_squarezero() {
  static constexpr std::pair<int, int> kSlots[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<BitMatrix> out;
  for (int mask = 0; mask < 64; ++mask) {
    BitMatrix n(4, 4);
    for (int b = 0; b < 6; ++b)
      if (mask >> b & 1) n.set(kSlots[b].first, kSlots[b].second);
    if ((n * n).is_zero() && n.rank() == 2) out.push_back(n);
  }
  return out;
}

std::vector<BitMatrix> u4_elements() {
  static constexpr std::pair<int, int> kSlots[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<BitMatrix> out;
  for (int mask = 0; mask < 64; ++mask) {
    BitMatrix u = BitMatrix::identity(4);
    for (int b = 0; b < 6; ++b)
      if (mask >> b & 1) u.set(kSlots[b].first, kSlots[b].second);
    out.push_back(u);
  }
  return out;
}

std::vector<RelationCheck> u4_relations_check() {
  const auto n = reference_nilpotents();
  std::vector<BitMatrix> z;
  for (const auto& m : n) z.push_back(BitMatrix::identity(4) + m);
  std::vector<RelationCheck> out;
  auto product = [&](int i, int a, int b) {
    RelationCheck c;
    c.name = "zbar" + std::to_string(i) + " = zbar" + std::to_string(a) + "*zbar" + std::to_string(b);
    c.ok = z[i - 1] == z[a - 1] * z[b - 1];
    c.detail = c.ok ? "holds" : "differs";
    out.push_back(c);
  };
  product(3, 1, 2);
  product(3, 2, 1);
  product(6, 4, 5);
  product(6, 5, 4);
  product(9, 1, 8);
  product(9, 8, 1);
  product(9, 5, 7);
  product(9, 7, 5);
  product(10, 1, 7);
  product(10, 7, 1);
  product(10, 5, 8);
  product(10, 8, 5);
  for (int i = 0; i < 10; ++i) {
    RelationCheck c;
    c.name = "zbar" + std::to_string(i + 1) + " is an involution";
    c.ok = z[i] * z[i] == BitMatrix::identity(4) && !(z[i] == BitMatrix::identity(4));
    c.detail = c.ok ? "order 2" : "not of order 2";
    out.push_back(c);
  }
  // fixed lines, as bit masks of column vectors: e1 = 1, e2 = 2, e3 = 4, e4 = 8
  auto fixed_space = [&](int i) {
    std::vector<std::uint64_t> fixed;
    for (std::uint64_t v = 1; v < 16; ++v)
      if (apply_to_column(z[i - 1], v) == v) fixed.push_back(v);
    return fixed;
  };
  auto line_check = [&](int i, std::uint64_t a, std::uint64_t b, const std::string& label) {
    const auto f = fixed_space(i);
    RelationCheck c;
    c.name = "zbar" + std::to_string(i) + " fixes " + label + " pointwise";
    const std::vector<std::uint64_t> want = {a, b, a ^ b};
    std::vector<std::uint64_t> sorted_want = want;
    std::sort(sorted_want.begin(), sorted_want.end());
    c.ok = f == sorted_want;
    c.detail = "fixed vectors: " + std::to_string(f.size());
    out.push_back(c);
  };
  for (int i = 1; i <= 6; ++i) line_check(i, 1, 2, "<e1,e2>");
  for (int i = 7; i <= 8; ++i) line_check(i, 1, 4, "<e1,e3>");
  for (int i = 9; i <= 10; ++i) line_check(i, 1, 2 ^ 4, "<e1,e2+e3>");
  return out;
}

BettiResult betti_f2(const std::vector<std::size_t>& dims, const std::vector<BitMatrix>& boundaries) {
  if (boundaries.size() + 1 != dims.size() && !(dims.empty() && boundaries.empty()))
    throw HomologyError("need one boundary map per positive dimension");
  std::vector<std::size_t> ranks(dims.size() + 1, 0);
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    const auto& d = boundaries[k];
    if (d.rows() != dims[k] || d.cols() != dims[k + 1])
      throw HomologyError("boundary map " + std::to_string(k + 1) + " has the wrong shape");
    if (k > 0 && !(boundaries[k - 1] * d).is_zero())
      throw HomologyError("boundary composite d" + std::to_string(k) + " d" +
                          std::to_string(k + 1) + " is nonzero");
    ranks[k + 1] = d.rank();
  }
  BettiResult r;
  for (std::size_t k = 0; k < dims.size(); ++k)
    r.betti.push_back(static_cast<long long>(dims[k]) - static_cast<long long>(ranks[k]) -
                      static_cast<long long>(ranks[k + 1]));
  r.reduced = r.betti;
  if (!r.reduced.empty() && dims[0] > 0) r.reduced[0] -= 1;
  return r;
}

std::size_t sparse_rank(std::vector<SparseColumn> columns) {
  std::unordered_map<std::uint32_t, std::size_t> pivot_owner;
  std::size_t rank = 0;
  SparseColumn tmp;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto& col = columns[j];
    while (!col.empty()) {
      auto it = pivot_owner.find(col.back());
      if (it == pivot_owner.end()) {
        pivot_owner.emplace(col.back(), j);
        ++rank;
        break;
      }
      const auto& other = columns[it->second];
      tmp.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(tmp));
      col.swap(tmp);
    }
  }
  return rank;
}

BettiResult betti_f2_sparse(const std::vector<std::size_t>& dims,
                            const std::vector<std::vector<SparseColumn>>& boundaries,
                            bool check_composites) {
  if (boundaries.size() + 1 != dims.size() && !(dims.empty() && boundaries.empty()))
    throw HomologyError("need one boundary map per positive dimension");
  std::vector<std::size_t> ranks(dims.size() + 1, 0);
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    if (boundaries[k].size() != dims[k + 1])
      throw HomologyError("boundary map " + std::to_string(k + 1) + " has the wrong shape");
    if (check_composites && k > 0) {
      const auto& lower = boundaries[k - 1];
      for (const auto& col : boundaries[k]) {
        std::unordered_map<std::uint32_t, int> parity;
        for (auto face : col)
          for (auto r : lower[face]) parity[r] ^= 1;
        for (auto& [r, v] : parity)
          if (v) throw HomologyError("boundary composite is nonzero");
      }
    }
    ranks[k + 1] = sparse_rank(boundaries[k]);
  }
  BettiResult r;
  for (std::size_t k = 0; k < dims.size(); ++k)
    r.betti.push_back(static_cast<long long>(dims[k]) - static_cast<long long>(ranks[k]) -
                      static_cast<long long>(ranks[k + 1]));
  r.reduced = r.betti;
  if (!r.reduced.empty() && dims[0] > 0) r.reduced[0] -= 1;
  return r;
}

}  // namespace radgeo
