#pragma once

#include <cstdint>
#include <vector>

namespace hda {

/// Dense integer matrix, row-major. Arithmetic is overflow-checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  std::int64_t at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }
  std::vector<std::int64_t> column(int c) const;

  static IntMatrix identity(int n);
  /// Columns placed side by side; all must share the row count.
  static IntMatrix from_columns(int rows, const std::vector<std::vector<std::int64_t>>& cols);

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> a_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::vector<std::int64_t> multiply(const IntMatrix& a, const std::vector<std::int64_t>& v);

/// Nonzero diagonal of the Smith normal form, each dividing the next.
std::vector<std::int64_t> invariant_factors(IntMatrix m);
int rank(const IntMatrix& m);

/// Unimodular column reduction: reduced = m * v, the first `rank` columns of
/// `reduced` are independent and the rest are zero. `v_inverse` is v^-1.
struct ColumnEchelon {
  IntMatrix reduced;
  IntMatrix v;
  IntMatrix v_inverse;
  int rank = 0;
};
ColumnEchelon column_echelon(const IntMatrix& m);

}  // namespace hda
