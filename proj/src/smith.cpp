#include "pbwdeg/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "pbwdeg/error.hpp"

namespace pbwdeg {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("smith: overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("smith: overflow");
  return out;
}

// Row op: row[dst] -= q * row[src].
void row_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    m(dst, c) = checked_sub(m(dst, c), checked_mul(q, m(src, c)));
  }
}

void col_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    m(r, dst) = checked_sub(m(r, dst), checked_mul(q, m(r, src)));
  }
}

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw UsageError("ragged integer matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<std::int64_t>> IntegerMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  }
  return out;
}

bool SmithNormalFormResult::split_injective(std::size_t cols) const {
  if (rank != cols) return false;
  for (auto d : divisors) {
    if (d != 1) return false;
  }
  return true;
}

SmithNormalFormResult smith_normal_form(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    // Pivot: smallest nonzero |entry| in the trailing block.
    bool found = false;
    for (;;) {
      std::size_t pr = 0, pc = 0;
      std::int64_t best = 0;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          std::int64_t v = std::llabs(m(r, c));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      }
      if (best == 0) break;
      found = true;
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        row_axpy(m, r, t, m(r, t) / m(t, t));
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        col_axpy(m, c, t, m(t, c) / m(t, t));
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any entry not divisible by the pivot into row t.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m(r, c) % m(t, t) != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      row_axpy(m, t, bad_row, -1);
    }
    if (!found) break;
  }

  SmithNormalFormResult out;
  for (std::size_t i = 0; i < t; ++i) out.divisors.push_back(std::llabs(m(i, i)));
  out.rank = out.divisors.size();
  return out;
}

}  // namespace pbwdeg
