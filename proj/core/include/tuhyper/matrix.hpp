#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tuhyper {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  [[nodiscard]] std::int64_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  [[nodiscard]] std::int64_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  [[nodiscard]] std::int64_t at(std::size_t r, std::size_t c) const;

  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] IntMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  [[nodiscard]] std::vector<std::vector<std::int64_t>> to_rows() const;
  [[nodiscard]] std::vector<std::int64_t> column(std::size_t c) const;
  [[nodiscard]] std::int64_t entry_sum() const;
  [[nodiscard]] bool entries_in_unit_range() const;  // all in {0, +1, -1}

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<std::int64_t> operator*(const IntMatrix& a, std::span<const std::int64_t> x);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

[[nodiscard]] std::size_t support_size(const IntMatrix& m);

}  // namespace tuhyper
