#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pbwdeg {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntegerMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct SmithNormalFormResult {
  /// Nonzero invariant factors d_1 | d_2 | ... | d_rank, all positive.
  std::vector<std::int64_t> divisors;
  std::size_t rank = 0;

  /// Injective with image a direct summand: full column rank, unit divisors.
  bool split_injective(std::size_t cols) const;
};

/// Invariant factors by unimodular row/column elimination. Throws
/// std::overflow_error if an intermediate entry leaves int64 range.
SmithNormalFormResult smith_normal_form(IntegerMatrix m);

}  // namespace pbwdeg
