#include "pbwdeg/coinvariant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pbwdeg/error.hpp"
#include "pbwdeg/rational.hpp"

namespace pbwdeg {

namespace {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

void trim(Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

int exponent_at(const Exponent& e, int i) {
  return i <= static_cast<int>(e.size()) ? e[static_cast<std::size_t>(i - 1)] : 0;
}

Exponent with_pair(Exponent e, int i, int a, int b) {
  if (static_cast<int>(e.size()) < i + 1) e.resize(static_cast<std::size_t>(i + 1), 0);
  e[static_cast<std::size_t>(i - 1)] = a;
  e[static_cast<std::size_t>(i)] = b;
  trim(e);
  return e;
}

}  // namespace

IntPolynomial IntPolynomial::constant(Coefficient c) { return monomial({}, c); }

IntPolynomial IntPolynomial::monomial(Exponent e, Coefficient c) {
  IntPolynomial p;
  p.add_term(std::move(e), c);
  return p;
}

IntPolynomial IntPolynomial::variable(int i) {
  if (i < 1) throw UsageError("variable index must be >= 1");
  Exponent e(static_cast<std::size_t>(i), 0);
  e.back() = 1;
  return monomial(std::move(e));
}

int IntPolynomial::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int a : e) d += a;
    best = std::max(best, d);
  }
  return best;
}

int IntPolynomial::variables() const {
  int n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, static_cast<int>(e.size()));
  return n;
}

Coefficient IntPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void IntPolynomial::add_term(Exponent e, Coefficient c) {
  if (c == 0) return;
  for (int a : e) {
    if (a < 0) throw UsageError("negative exponent");
  }
  trim(e);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  IntPolynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  IntPolynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  IntPolynomial out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponent e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
      for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      out.add_term(std::move(e), checked_mul(ca, cb));
    }
  }
  return out;
}

IntPolynomial IntPolynomial::operator*(Coefficient c) const {
  IntPolynomial out;
  for (const auto& [e, a] : terms_) out.add_term(e, checked_mul(a, c));
  return out;
}

IntPolynomial IntPolynomial::swap_variables(int i) const {
  IntPolynomial out;
  for (const auto& [e, c] : terms_) {
    out.add_term(with_pair(e, i, exponent_at(e, i + 1), exponent_at(e, i)), c);
  }
  return out;
}

std::optional<std::pair<Exponent, Coefficient>> IntPolynomial::lowest_term() const {
  if (terms_.empty()) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  return std::make_pair(e, c);
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second;
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      if (it->first[k] == 0) continue;
      os << " x" << k + 1;
      if (it->first[k] != 1) os << '^' << it->first[k];
    }
  }
  return os.str();
}

IntPolynomial divided_difference(const IntPolynomial& f, int i) {
  if (i < 1) throw UsageError("divided difference index must be >= 1");
  IntPolynomial out;
  for (const auto& [e, c] : f.terms()) {
    const int a = exponent_at(e, i);
    const int b = exponent_at(e, i + 1);
    if (a > b) {
      for (int k = 0; k < a - b; ++k) out.add_term(with_pair(e, i, a - 1 - k, b + k), c);
    } else if (a < b) {
      for (int k = 0; k < b - a; ++k) out.add_term(with_pair(e, i, a + k, b - 1 - k), -c);
    }
  }
  return out;
}

IntPolynomial schubert_polynomial(const Permutation& w) {
  const int n = w.size();
  Exponent staircase;
  for (int k = n - 1; k >= 1; --k) staircase.push_back(k);
  IntPolynomial f = IntPolynomial::monomial(staircase);
  // Peel right descents off u = w^{-1} w0; the last letter acts first.
  Permutation u = w.inverse() * Permutation::longest(n);
  for (;;) {
    auto d = u.descents();
    if (d.empty()) break;
    f = divided_difference(f, d.front());
    u = u.times_simple(d.front());
  }
  return f;
}

const IntPolynomial& stable_schubert_polynomial(const Permutation& w_in) {
  thread_local std::map<Permutation, IntPolynomial> cache;
  Permutation w = w_in.trimmed();
  if (auto it = cache.find(w); it != cache.end()) return it->second;

  Exponent code = w.code();
  trim(code);
  IntPolynomial p;
  std::size_t climb = code.size();
  for (std::size_t i = 0; i + 1 < code.size(); ++i) {
    if (code[i] < code[i + 1]) {
      climb = i;
      break;
    }
  }
  if (climb == code.size()) {
    p = IntPolynomial::monomial(code);  // dominant
  } else {
    const int i = static_cast<int>(climb) + 1;
    p = divided_difference(stable_schubert_polynomial(w.times_simple(i)), i);
  }
  return cache.emplace(std::move(w), std::move(p)).first->second;
}

std::map<Permutation, Coefficient> schubert_expansion(const IntPolynomial& p, int n) {
  std::map<Permutation, Coefficient> out;
  IntPolynomial rest = p;
  while (auto lead = rest.lowest_term()) {
    const auto& [e, c] = *lead;
    Permutation w = permutation_from_code(e).trimmed();
    const IntPolynomial& s = stable_schubert_polynomial(w);
    if (s.lowest_term()->first != e) {
      throw std::logic_error("Schubert polynomial lowest term is not its code monomial");
    }
    for (const auto& [se, sc] : s.terms()) rest.add_term(se, checked_mul(-c, sc));
    if (w.size() <= n) {
      Coefficient& slot = out[w.extended(n)];
      slot = checked_add(slot, c);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// ---------------------------------------------------------------------------

SchubertClass SchubertClass::basis(const Permutation& u, const FlagShape& ambient) {
  if (!is_min_coset_rep(u, ambient)) {
    throw UsageError(u.to_string() + " is not a minimal coset representative of " + ambient.to_string());
  }
  SchubertClass c(ambient);
  c.add(u, 1);
  return c;
}

SchubertClass SchubertClass::unit(const FlagShape& ambient) {
  return basis(Permutation::identity(ambient.ambient()), ambient);
}

Coefficient SchubertClass::coefficient(const Permutation& u) const {
  auto it = coeffs_.find(u);
  return it == coeffs_.end() ? 0 : it->second;
}

void SchubertClass::add(const Permutation& u, Coefficient c) {
  if (c == 0) return;
  Coefficient& slot = coeffs_[u];
  slot = checked_add(slot, c);
  if (slot == 0) coeffs_.erase(u);
}

IntPolynomial SchubertClass::representative() const {
  IntPolynomial p;
  for (const auto& [u, c] : coeffs_) p = p + stable_schubert_polynomial(u) * c;
  return p;
}

SchubertClass SchubertClass::operator+(const SchubertClass& other) const {
  if (!(other.ambient_ == ambient_)) throw UsageError("adding classes of different ambients");
  SchubertClass out = *this;
  for (const auto& [u, c] : other.coeffs_) out.add(u, c);
  return out;
}

std::string SchubertClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : coeffs_) {
    os << (first ? "" : " + ") << c << "*[" << u.to_string() << "]";
    first = false;
  }
  return os.str();
}

SchubertClass product_in_schubert_basis(const SchubertClass& a, const SchubertClass& b) {
  if (!(a.ambient() == b.ambient())) throw UsageError("product of classes of different ambients");
  const FlagShape& shape = a.ambient();
  SchubertClass out(shape);
  for (const auto& [u, c] : schubert_expansion(a.representative() * b.representative(), shape.ambient())) {
    if (!is_min_coset_rep(u, shape)) {
      throw std::logic_error("product left the invariant subring at index " + u.to_string());
    }
    out.add(u, c);
  }
  return out;
}

std::vector<long long> betti_numbers(const FlagShape& shape) {
  std::vector<long long> out;
  for (const auto& w : min_coset_reps(shape)) {
    auto len = static_cast<std::size_t>(w.length());
    if (out.size() <= len) out.resize(len + 1, 0);
    ++out[len];
  }
  return out;
}

namespace {

// Schubert coordinates of (s_i - 1) S_w in the coinvariant algebra of S_n,
// indexed like min_coset_reps(complete(n)).
const std::vector<std::map<Permutation, Coefficient>>& reflection_action(int n, int i) {
  thread_local std::map<std::pair<int, int>, std::vector<std::map<Permutation, Coefficient>>> cache;
  auto key = std::make_pair(n, i);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<std::map<Permutation, Coefficient>> images;
  for (const auto& w : min_coset_reps(FlagShape::complete(n))) {
    const IntPolynomial& s = stable_schubert_polynomial(w);
    images.push_back(schubert_expansion(s.swap_variables(i) - s, n));
  }
  return cache.emplace(key, std::move(images)).first->second;
}

}  // namespace

std::vector<long long> invariant_coinvariant_ranks(const FlagShape& shape) {
  const int n = shape.ambient();
  const auto all = min_coset_reps(FlagShape::complete(n));
  std::map<Permutation, std::size_t> index;
  for (std::size_t k = 0; k < all.size(); ++k) index.emplace(all[k], k);

  std::vector<int> generators;
  auto dims = shape.dims();
  for (int i = 1; i < n; ++i) {
    if (std::find(dims.begin(), dims.end(), i) == dims.end()) generators.push_back(i);
  }

  const int top = n * (n - 1) / 2;
  std::vector<long long> ranks(static_cast<std::size_t>(top + 1), 0);
  for (int deg = 0; deg <= top; ++deg) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (all[k].length() == deg) cols.push_back(k);
    }
    // Row per basis element: its images under every (s_i - 1), concatenated.
    Matrix rows;
    for (std::size_t k : cols) {
      Vector row(generators.size() * all.size(), 0);
      for (std::size_t g = 0; g < generators.size(); ++g) {
        for (const auto& [u, c] : reflection_action(n, generators[g])[k]) {
          row[g * all.size() + index.at(u)] = c;
        }
      }
      rows.push_back(std::move(row));
    }
    const std::size_t width = generators.size() * all.size();
    ranks[static_cast<std::size_t>(deg)] =
        static_cast<long long>(cols.size() - (width == 0 ? 0 : rank(std::move(rows), width)));
  }
  return ranks;
}

// ---------------------------------------------------------------------------

std::vector<Permutation> PresentedRing::basis() const {
  std::vector<Permutation> out;
  for (const auto& level : basis_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<long long> PresentedRing::graded_ranks() const {
  std::vector<long long> out;
  for (const auto& level : basis_) out.push_back(static_cast<long long>(level.size()));
  return out;
}

bool PresentedRing::in_basis(const Permutation& u) const {
  auto len = static_cast<std::size_t>(u.length());
  if (len >= basis_.size()) return false;
  return std::binary_search(basis_[len].begin(), basis_[len].end(), u);
}

void PresentedRing::tabulate() {
  const auto all = basis();
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a; b < all.size(); ++b) {
      SchubertClass full = product_in_schubert_basis(SchubertClass::basis(all[a], shape_),
                                                     SchubertClass::basis(all[b], shape_));
      SchubertClass kept(shape_);
      for (const auto& [u, c] : full.coeffs()) {
        if (in_basis(u)) kept.add(u, c);
      }
      products_.emplace(std::minmax(all[a], all[b]), std::move(kept));
    }
  }
}

const SchubertClass& PresentedRing::product(const Permutation& u, const Permutation& v) const {
  auto it = products_.find(std::minmax(u, v));
  if (it == products_.end()) throw UsageError("product: index outside the ring basis");
  return it->second;
}

SchubertClass PresentedRing::multiply(const SchubertClass& a, const SchubertClass& b) const {
  SchubertClass out(shape_);
  for (const auto& [u, cu] : a.coeffs()) {
    for (const auto& [v, cv] : b.coeffs()) {
      for (const auto& [w, cw] : product(u, v).coeffs()) out.add(w, cu * cv * cw);
    }
  }
  return out;
}

bool PresentedRing::is_associative() const {
  const auto all = basis();
  for (const auto& u : all) {
    for (const auto& v : all) {
      const SchubertClass& uv = product(u, v);
      for (const auto& w : all) {
        const SchubertClass& vw = product(v, w);
        if (!(multiply(uv, SchubertClass::basis(w, shape_)) == multiply(SchubertClass::basis(u, shape_), vw))) {
          return false;
        }
      }
    }
  }
  return true;
}

PresentedRing cohomology_of_flag_variety(const FlagShape& shape) {
  PresentedRing ring;
  ring.shape_ = shape;
  for (auto& w : min_coset_reps(shape)) {
    auto len = static_cast<std::size_t>(w.length());
    if (ring.basis_.size() <= len) ring.basis_.resize(len + 1);
    ring.basis_[len].push_back(std::move(w));
  }
  for (auto& level : ring.basis_) std::sort(level.begin(), level.end());
  ring.tabulate();
  return ring;
}

PresentedRing cohomology_of_schubert(const Permutation& w, const FlagShape& shape) {
  PresentedRing ring;
  ring.shape_ = shape;
  ring.truncation_ = w;
  ring.basis_ = bruhat_interval(w, shape);
  for (auto& level : ring.basis_) std::sort(level.begin(), level.end());
  ring.tabulate();
  return ring;
}

}  // namespace pbwdeg
