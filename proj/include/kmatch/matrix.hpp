#ifndef KMATCH_MATRIX_HPP
#define KMATCH_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace kmatch {

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// 1-indexed.
  long& operator()(int i, int j) { return data_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)]; }
  long operator()(int i, int j) const { return data_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)]; }

private:
  int rows_, cols_;
  std::vector<long> data_;
};

} // namespace kmatch

#endif // KMATCH_MATRIX_HPP
