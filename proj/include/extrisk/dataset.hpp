#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace extrisk {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) noexcept { return cells_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return cells_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const noexcept {
    return {cells_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) noexcept { return {cells_.data() + r * cols_, cols_}; }

  std::vector<double> column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = cells_[r * cols_ + c];
    return out;
  }

  /// Row-subset copy.
  Matrix take_rows(std::span<const std::size_t> idx) const {
    Matrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const double* src = cells_.data() + idx[i] * cols_;
      std::copy(src, src + cols_, out.cells_.data() + i * cols_);
    }
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> cells_;
};

/// Immutable-after-load feature matrix plus the target series H.
/// All entries are finite, features nonnegative, n >= 1.
struct Dataset {
  std::vector<std::string> feature_names;
  Matrix features;             // n x d
  std::vector<double> target;  // H, length n
  std::string target_name = "H";

  std::size_t n_rows() const noexcept { return target.size(); }
  std::size_t n_features() const noexcept { return features.cols(); }

  /// Checks the invariants above; throws data_error on violation.
  void validate() const;

  bool operator==(const Dataset&) const = default;
};

}  // namespace extrisk
