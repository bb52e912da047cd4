#include "reeder/f2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "reeder/error.hpp"

namespace reeder {

namespace {

struct Reduced {
  std::vector<std::vector<std::uint64_t>> rows;  // reduced row echelon form
  std::vector<int> pivot_cols;                   // pivot column of rows[0..rank)
};

bool bit_of(const std::vector<std::uint64_t>& row, int c) {
  return (row[static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1u;
}

void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

// Gauss-Jordan elimination, scanning columns left to right.
Reduced reduce(std::vector<std::vector<std::uint64_t>> rows, int cols) {
  Reduced out;
  int next = 0;
  const int n_rows = static_cast<int>(rows.size());
  for (int c = 0; c < cols && next < n_rows; ++c) {
    int pivot = -1;
    for (int r = next; r < n_rows; ++r) {
      if (bit_of(rows[r], c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[next], rows[pivot]);
    for (int r = 0; r < n_rows; ++r) {
      if (r != next && bit_of(rows[r], c)) xor_into(rows[r], rows[next]);
    }
    out.pivot_cols.push_back(c);
    ++next;
  }
  out.rows = std::move(rows);
  return out;
}

}  // namespace

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw IndexError("F2Matrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * words_per_row(), 0);
}

F2Matrix F2Matrix::identity(int n) {
  F2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool F2Matrix::get(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw IndexError("F2Matrix: index out of range");
  return (row_ptr(r)[c / 64] >> (c % 64)) & 1u;
}

void F2Matrix::set(int r, int c, bool value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw IndexError("F2Matrix: index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (value) {
    row_ptr(r)[c / 64] |= bit;
  } else {
    row_ptr(r)[c / 64] &= ~bit;
  }
}

void F2Matrix::flip(int r, int c) { set(r, c, !get(r, c)); }

std::uint64_t F2Matrix::row_mask(int r) const {
  if (cols_ > 64) throw PreconditionError("F2Matrix::row_mask needs at most 64 columns");
  if (r < 0 || r >= rows_) throw IndexError("F2Matrix: row out of range");
  return cols_ == 0 ? 0 : row_ptr(r)[0];
}

void F2Matrix::set_row_mask(int r, std::uint64_t mask) {
  if (cols_ > 64) throw PreconditionError("F2Matrix::set_row_mask needs at most 64 columns");
  if (r < 0 || r >= rows_) throw IndexError("F2Matrix: row out of range");
  if (cols_ < 64) mask &= (std::uint64_t{1} << cols_) - 1;
  if (cols_ > 0) row_ptr(r)[0] = mask;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw IndexError("F2Matrix: dimension mismatch in product");
  F2Matrix out(rows_, rhs.cols_);
  const int w = rhs.words_per_row();
  for (int r = 0; r < rows_; ++r) {
    std::uint64_t* dst = out.row_ptr(r);
    for (int k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const std::uint64_t* src = rhs.row_ptr(k);
      for (int j = 0; j < w; ++j) dst[j] ^= src[j];
    }
  }
  return out;
}

std::uint64_t F2Matrix::apply(std::uint64_t v) const {
  if (cols_ > 64 || rows_ > 64) throw PreconditionError("F2Matrix::apply needs at most 64 rows and columns");
  std::uint64_t out = 0;
  for (int r = 0; r < rows_; ++r) {
    if (std::popcount(row_mask(r) & v) & 1) out |= std::uint64_t{1} << r;
  }
  return out;
}

int F2Matrix::rank() const {
  std::vector<std::vector<std::uint64_t>> rows(rows_);
  for (int r = 0; r < rows_; ++r) rows[r].assign(row_ptr(r), row_ptr(r) + words_per_row());
  return static_cast<int>(reduce(std::move(rows), cols_).pivot_cols.size());
}

int F2Matrix::determinant() const {
  if (rows_ != cols_) throw PreconditionError("F2Matrix::determinant needs a square matrix");
  return rank() == rows_ ? 1 : 0;
}

std::vector<std::uint64_t> F2Matrix::nullspace_basis() const {
  if (cols_ > 64) throw PreconditionError("F2Matrix::nullspace_basis needs at most 64 columns");
  std::vector<std::vector<std::uint64_t>> rows(rows_);
  for (int r = 0; r < rows_; ++r) rows[r].assign(row_ptr(r), row_ptr(r) + words_per_row());
  const Reduced red = reduce(std::move(rows), cols_);

  std::vector<bool> is_pivot(cols_, false);
  for (int c : red.pivot_cols) is_pivot[c] = true;

  std::vector<std::uint64_t> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
      if (bit_of(red.rows[i], f)) v |= std::uint64_t{1} << red.pivot_cols[i];
    }
    basis.push_back(v);
  }
  return basis;
}

bool F2Matrix::solve(std::uint64_t b, std::uint64_t& x) const {
  if (cols_ > 63 || rows_ > 64) throw PreconditionError("F2Matrix::solve needs at most 63 columns");
  // Augment each row with its right-hand side bit in column cols_.
  std::vector<std::vector<std::uint64_t>> rows(rows_);
  for (int r = 0; r < rows_; ++r) {
    const std::uint64_t rhs = (b >> r) & 1u;
    rows[r] = {row_mask(r) | (rhs << cols_)};
  }
  const Reduced red = reduce(std::move(rows), cols_ + 1);
  x = 0;
  for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
    const int c = red.pivot_cols[i];
    if (c == cols_) return false;
    if (bit_of(red.rows[i], cols_)) x |= std::uint64_t{1} << c;
  }
  return true;
}

std::string F2Matrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

}  // namespace reeder
