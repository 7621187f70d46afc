#include "pbwdeg/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "pbwdeg/error.hpp"

namespace pbwdeg {

namespace {

std::vector<int> parse_ints(std::string_view csv) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view tok = csv.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw UsageError("cannot parse integer list: '" + std::string(csv) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string join(std::span<const int> xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

bool is_bijection(std::span<const int> window) {
  std::vector<bool> seen(window.size() + 1, false);
  for (int v : window) {
    if (v < 1 || static_cast<std::size_t>(v) > window.size() || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  if (!is_bijection(window_)) throw UsageError("not a permutation: " + join(window_));
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw UsageError("simple reflection index out of range");
  return identity(n).times_simple(i);
}

Permutation Permutation::parse(std::string_view csv) { return Permutation(parse_ints(csv)); }

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    for (std::size_t j = i + 1; j < window_.size(); ++j) inv += window_[i] > window_[j];
  }
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) {
    inv[static_cast<std::size_t>(window_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) throw UsageError("composition of different sizes");
  std::vector<int> w(window_.size());
  for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(w));
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= size()) throw UsageError("simple reflection index out of range");
  Permutation out = *this;
  std::swap(out.window_[static_cast<std::size_t>(i - 1)], out.window_[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<int> Permutation::code() const {
  std::vector<int> c(window_.size(), 0);
  for (std::size_t i = 0; i < window_.size(); ++i) {
    for (std::size_t j = i + 1; j < window_.size(); ++j) c[i] += window_[j] < window_[i];
  }
  return c;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i) {
    if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
  }
  return d;
}

Permutation Permutation::trimmed() const {
  std::vector<int> w = window_;
  while (!w.empty() && w.back() == static_cast<int>(w.size())) w.pop_back();
  Permutation out;
  out.window_ = std::move(w);
  return out;
}

Permutation Permutation::extended(int n) const {
  if (n < size()) throw UsageError("cannot shrink a permutation");
  std::vector<int> w = window_;
  for (int v = size() + 1; v <= n; ++v) w.push_back(v);
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const { return join(window_); }

Permutation permutation_from_code(std::span<const int> code) {
  int n = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] < 0) throw UsageError("negative code entry");
    n = std::max(n, static_cast<int>(i) + 1 + code[i]);
  }
  std::vector<int> unused(static_cast<std::size_t>(n));
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> w;
  for (int i = 0; i < n; ++i) {
    int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
    w.push_back(unused[static_cast<std::size_t>(c)]);
    unused.erase(unused.begin() + c);
  }
  return Permutation(std::move(w));
}

// ---------------------------------------------------------------------------

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  std::vector<int> abs_window;
  for (int v : window_) abs_window.push_back(std::abs(v));
  if (!is_bijection(abs_window)) throw UsageError("not a signed permutation: " + join(window_));
}

SignedPermutation SignedPermutation::parse(std::string_view csv) {
  return SignedPermutation(parse_ints(csv));
}

Permutation SignedPermutation::to_embedded() const {
  // positions -n..-1, 1..n relabelled 1..2n; same for values
  const int n = size();
  std::vector<int> u(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    const int v = window_[static_cast<std::size_t>(i - 1)];
    const int image = v > 0 ? n + v : n + 1 + v;
    u[static_cast<std::size_t>(n + i - 1)] = image;
    u[static_cast<std::size_t>(n - i)] = 2 * n + 1 - image;
  }
  return Permutation(std::move(u));
}

SignedPermutation SignedPermutation::from_embedded(const Permutation& u) {
  const int two_n = u.size();
  if (two_n % 2 != 0) throw UsageError("embedded signed permutation needs even size");
  const int n = two_n / 2;
  std::vector<int> w;
  for (int i = 1; i <= two_n; ++i) {
    if (u(two_n + 1 - i) != two_n + 1 - u(i)) {
      throw UsageError("permutation does not commute with the flip: " + u.to_string());
    }
  }
  for (int i = 1; i <= n; ++i) {
    const int image = u(n + i);
    w.push_back(image > n ? image - n : image - n - 1);
  }
  return SignedPermutation(std::move(w));
}

std::vector<SignedPermutation> SignedPermutation::all(int n) {
  std::vector<SignedPermutation> out;
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w = base;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      }
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

int SignedPermutation::length() const {
  int len = 0;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    for (std::size_t j = i; j < window_.size(); ++j) {
      if (j > i && window_[i] > window_[j]) ++len;
      if (window_[i] + window_[j] < 0) ++len;
    }
  }
  return len;
}

std::string SignedPermutation::to_string() const { return join(window_); }

// ---------------------------------------------------------------------------

FlagShape::FlagShape(std::vector<int> dims, int ambient) : dims_(std::move(dims)), ambient_(ambient) {
  if (dims_.empty()) throw UsageError("flag shape needs at least one member");
  if (dims_.front() < 1 || dims_.back() > ambient_ - 1) {
    throw UsageError("flag shape dims out of range for ambient " + std::to_string(ambient_));
  }
  for (std::size_t i = 1; i < dims_.size(); ++i) {
    if (dims_[i] <= dims_[i - 1]) throw UsageError("flag shape dims must increase strictly");
  }
}

FlagShape FlagShape::complete(int n) {
  std::vector<int> dims(static_cast<std::size_t>(n - 1));
  std::iota(dims.begin(), dims.end(), 1);
  return FlagShape(std::move(dims), n);
}

std::vector<int> FlagShape::block_sizes() const {
  std::vector<int> sizes;
  int prev = 0;
  for (int d : dims_) {
    sizes.push_back(d - prev);
    prev = d;
  }
  sizes.push_back(ambient_ - prev);
  return sizes;
}

std::string FlagShape::to_string() const {
  return "(" + join(dims_) + ")/" + std::to_string(ambient_);
}

// ---------------------------------------------------------------------------

RankTable::RankTable(const Permutation& w, const FlagShape& shape) : shape_(shape) {
  const int n = shape.ambient();
  if (w.size() != n) throw UsageError("rank table: permutation size != ambient");
  for (int d : shape.dims()) {
    std::vector<int> row(static_cast<std::size_t>(n + 1), 0);
    for (int j = 1; j <= d; ++j) ++row[static_cast<std::size_t>(w(j))];
    std::partial_sum(row.begin(), row.end(), row.begin());
    entries_.push_back(std::move(row));
  }
}

RankTable::RankTable(std::vector<std::vector<int>> entries, const FlagShape& shape)
    : entries_(std::move(entries)), shape_(shape) {
  const auto n = static_cast<std::size_t>(shape.ambient());
  if (entries_.size() != static_cast<std::size_t>(shape.members())) {
    throw UsageError("rank table: wrong member count");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& row = entries_[i];
    if (row.size() != n + 1 || row[0] != 0 || row[n] != shape.dims()[i]) {
      throw UsageError("rank table: bad row boundary values");
    }
    for (std::size_t k = 1; k <= n; ++k) {
      int step = row[k] - row[k - 1];
      if (step != 0 && step != 1) throw UsageError("rank table: increments must be 0 or 1");
      if (i > 0 && entries_[i - 1][k] > row[k]) throw UsageError("rank table: members not nested");
    }
  }
}

bool RankTable::dominates(const RankTable& other) const {
  if (!(shape_ == other.shape_)) throw UsageError("rank tables of different shapes");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t k = 0; k < entries_[i].size(); ++k) {
      if (entries_[i][k] < other.entries_[i][k]) return false;
    }
  }
  return true;
}

std::vector<int> RankTable::jumps(int member) const {
  const auto& row = entries_[static_cast<std::size_t>(member - 1)];
  std::vector<int> out;
  for (std::size_t k = 1; k < row.size(); ++k) {
    if (row[k] > row[k - 1]) out.push_back(static_cast<int>(k));
  }
  return out;
}

bool is_min_coset_rep(const Permutation& w, const FlagShape& shape) {
  if (w.size() != shape.ambient()) return false;
  auto dims = shape.dims();
  for (int i : w.descents()) {
    if (std::find(dims.begin(), dims.end(), i) == dims.end()) return false;
  }
  return true;
}

bool bruhat_leq(const Permutation& y, const Permutation& w) {
  const int n = y.size();
  if (w.size() != n) throw UsageError("bruhat_leq: size mismatch");
  // Prefix-by-prefix comparison of the counts #{j <= i : x(j) <= k}.
  std::vector<int> cy(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> cw(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i < n; ++i) {
    for (int k = y(i); k <= n; ++k) ++cy[static_cast<std::size_t>(k)];
    for (int k = w(i); k <= n; ++k) ++cw[static_cast<std::size_t>(k)];
    for (int k = 1; k <= n; ++k) {
      if (cy[static_cast<std::size_t>(k)] < cw[static_cast<std::size_t>(k)]) return false;
    }
  }
  return true;
}

bool bruhat_leq(const SignedPermutation& y, const SignedPermutation& w) {
  return bruhat_leq(y.to_embedded(), w.to_embedded());
}

std::vector<Permutation> min_coset_reps(const FlagShape& shape) {
  // Enumerate block labels of each value as multiset permutations; the
  // representative lists each block in ascending order.
  const auto sizes = shape.block_sizes();
  std::vector<int> labels;
  for (std::size_t b = 0; b < sizes.size(); ++b) labels.insert(labels.end(), static_cast<std::size_t>(sizes[b]), static_cast<int>(b));
  std::vector<Permutation> out;
  do {
    std::vector<int> window;
    window.reserve(labels.size());
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      for (std::size_t v = 0; v < labels.size(); ++v) {
        if (labels[v] == static_cast<int>(b)) window.push_back(static_cast<int>(v) + 1);
      }
    }
    out.emplace_back(std::move(window));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::vector<std::pair<int, Permutation>> keyed;
  keyed.reserve(out.size());
  for (auto& w : out) keyed.emplace_back(w.length(), std::move(w));
  std::sort(keyed.begin(), keyed.end());
  out.clear();
  for (auto& [len, w] : keyed) out.push_back(std::move(w));
  return out;
}

Permutation coset_rep_of_coordinate_flag(const std::vector<std::vector<int>>& members,
                                         const FlagShape& shape) {
  const int n = shape.ambient();
  if (members.size() != static_cast<std::size_t>(shape.members())) {
    throw UsageError("coordinate flag: wrong number of members");
  }
  std::vector<int> window;
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::vector<int> set = members[i];
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end() ||
        static_cast<int>(set.size()) != shape.dims()[i]) {
      throw UsageError("coordinate flag: member " + std::to_string(i + 1) + " has wrong size");
    }
    std::vector<int> block;
    for (int v : set) {
      if (v < 1 || v > n) throw UsageError("coordinate flag: index out of range");
      if (!used[static_cast<std::size_t>(v)]) block.push_back(v);
    }
    if (window.size() + block.size() != set.size()) {
      throw UsageError("coordinate flag: members are not nested");
    }
    for (int v : block) used[static_cast<std::size_t>(v)] = true;
    window.insert(window.end(), block.begin(), block.end());
  }
  for (int v = 1; v <= n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) window.push_back(v);
  }
  return Permutation(std::move(window));
}

std::vector<std::vector<int>> coordinate_flag(const Permutation& w, const FlagShape& shape) {
  std::vector<std::vector<int>> members;
  for (int d : shape.dims()) {
    std::vector<int> set(w.window().begin(), w.window().begin() + d);
    std::sort(set.begin(), set.end());
    members.push_back(std::move(set));
  }
  return members;
}

std::vector<std::vector<Permutation>> bruhat_interval(const Permutation& w, const FlagShape& shape) {
  if (!is_min_coset_rep(w, shape)) {
    throw UsageError("bruhat_interval: " + w.to_string() + " is not a minimal coset representative of " +
                     shape.to_string());
  }
  const RankTable top(w, shape);
  std::vector<std::vector<Permutation>> graded(static_cast<std::size_t>(w.length() + 1));
  for (auto& y : min_coset_reps(shape)) {
    if (y.length() > w.length()) break;
    if (RankTable(y, shape).dominates(top)) graded[static_cast<std::size_t>(y.length())].push_back(std::move(y));
  }
  return graded;
}

}  // namespace pbwdeg
