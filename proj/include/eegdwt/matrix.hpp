#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "eegdwt/error.hpp"

namespace eegdwt {

// Dense row-major matrix of doubles. For EEG data rows are channels and
// columns are samples; for feature tables rows are samples.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) {
        throw DomainError("Matrix::from_rows: ragged rows");
      }
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }

  // Columns [begin, begin + count) of every row.
  Matrix col_range(std::size_t begin, std::size_t count) const {
    if (begin + count > cols_) throw DomainError("Matrix::col_range out of bounds");
    Matrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r) {
      auto src = row(r).subspan(begin, count);
      std::copy(src.begin(), src.end(), out.row(r).begin());
    }
    return out;
  }

  void push_row(std::span<const double> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw DomainError("Matrix::push_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace eegdwt
