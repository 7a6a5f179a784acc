#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace radgeo {

/// Dense matrix over F2, rows packed 64 bits per word.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);
  /// From a 0/1 grid given row by row.
  static BitMatrix from_rows(const std::vector<std::vector<int>>& grid);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v = true);
  void flip(std::size_t r, std::size_t c) { row(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }
  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }
  std::size_t words_per_row() const { return words_; }

  bool is_zero() const;
  BitMatrix transpose() const;
  std::size_t rank() const;
  /// Basis of {v : A v = 0}, one vector per row of the result.
  BitMatrix nullspace() const;
  std::string to_string() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Column vector v (bit i = coordinate i) multiplied on the left by A; needs cols() <= 64.
std::uint64_t apply_to_column(const BitMatrix& a, std::uint64_t v);

// ---- the 4x4 unitriangular model ----

/// The ten rank-2 square-zero strictly upper triangular matrices in the
/// reference order N1..N10 used throughout the suite (0-based index i is N_{i+1}).
std::vector<BitMatrix> reference_nilpotents();

/// All strictly upper triangular 4x4 N with N^2 = 0 and rank 2 (brute force).
std::vector<BitMatrix> enumerate_rank2_squarezero();

/// All 64 unitriangular 4x4 matrices.
std::vector<BitMatrix> u4_elements();

struct RelationCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Product and fixed-line relations among zbar_i = I + N_i, with matrices
/// acting on column vectors.
std::vector<RelationCheck> u4_relations_check();

// ---- homology ----

struct BettiResult {
  std::vector<long long> betti;    // beta_0 .. beta_d
  std::vector<long long> reduced;  // reduced Betti numbers (beta_0 - 1 when nonempty)
};

class HomologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Betti numbers over F2 from chain-group dimensions dims[0..d] and the
/// boundary maps boundaries[k-1] : C_k -> C_{k-1} (rows = dims[k-1], cols = dims[k]).
/// Throws HomologyError when a composite boundary is nonzero.
BettiResult betti_f2(const std::vector<std::size_t>& dims, const std::vector<BitMatrix>& boundaries);

/// Sparse F2 column: sorted row indices.
using SparseColumn = std::vector<std::uint32_t>;

/// Rank of a sparse F2 matrix given by columns (standard pivot reduction).
std::size_t sparse_rank(std::vector<SparseColumn> columns);

/// Same contract as betti_f2 with sparse boundary matrices.
BettiResult betti_f2_sparse(const std::vector<std::size_t>& dims,
                            const std::vector<std::vector<SparseColumn>>& boundaries,
                            bool check_composites = true);

}  // namespace radgeo
