#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reeder {

// Dense matrix over GF(2). Rows are packed 64 columns per word.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols);

  static F2Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool value);
  void flip(int r, int c);

  // Row r as a bit mask; only valid when cols() <= 64.
  std::uint64_t row_mask(int r) const;
  void set_row_mask(int r, std::uint64_t mask);

  F2Matrix transpose() const;
  F2Matrix operator*(const F2Matrix& rhs) const;
  // Matrix-vector product with the vector packed as a mask (cols() <= 64).
  std::uint64_t apply(std::uint64_t v) const;

  int rank() const;
  int nullity() const { return cols_ - rank(); }
  // Determinant of a square matrix; 1 iff full rank.
  int determinant() const;

  // Basis of the right nullspace {x : M x = 0}. Pivot columns are chosen in
  // increasing index order; one basis vector per free column, also in
  // increasing order. Requires cols() <= 64.
  std::vector<std::uint64_t> nullspace_basis() const;

  // One solution of M x = b (b packed as a mask over rows), or false when the
  // system is inconsistent. Free variables are set to zero. Requires rows()
  // and cols() <= 64.
  bool solve(std::uint64_t b, std::uint64_t& x) const;

  std::string to_string() const;

  bool operator==(const F2Matrix& other) const = default;

 private:
  int words_per_row() const { return (cols_ + 63) / 64; }
  std::uint64_t* row_ptr(int r) { return data_.data() + static_cast<std::size_t>(r) * words_per_row(); }
  const std::uint64_t* row_ptr(int r) const {
    return data_.data() + static_cast<std::size_t>(r) * words_per_row();
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace reeder
