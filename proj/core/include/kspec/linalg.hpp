#pragma once

// Sparse exact linear algebra. Two arithmetic policies share one echelon
// engine: fraction-free integers (authoritative) and a word-size prime field
// (fast path). Vectors are sorted (index, value) lists without zeros.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kspec {

template <class E>
using SparseVec = std::vector<std::pair<std::uint32_t, E>>;
using QVec = SparseVec<mpq_class>;
using ZVec = SparseVec<mpz_class>;

struct IntegerArith {
  using Elem = mpz_class;
  static constexpr bool kExact = true;

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem from_int(long v) const { return Elem(v); }
  Elem from_mpz(const mpz_class& v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }

  // alpha * a - beta * pivot == 0 with alpha != 0.
  void elim_coeffs(const Elem& pivot, const Elem& a, Elem& alpha, Elem& beta) const;
  // Incoming row should replace the resident pivot row.
  bool prefer(const Elem& incoming, const Elem& resident) const;
  // Divide by the content of (v, tag) and make the leading entry of v positive.
  void normalize(SparseVec<Elem>& v, SparseVec<Elem>& tag) const;
};

class ModArith {
 public:
  using Elem = std::uint32_t;
  static constexpr bool kExact = false;

  explicit ModArith(std::uint32_t p) : p_(p) {}
  std::uint32_t prime() const { return p_; }

  bool is_zero(Elem a) const { return a == 0; }
  Elem from_int(long v) const;
  Elem from_mpz(const mpz_class& v) const;
  Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p_); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + p_ - b) % p_); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;

  void elim_coeffs(Elem pivot, Elem a, Elem& alpha, Elem& beta) const;
  bool prefer(Elem, Elem) const { return false; }
  // Scale so the leading entry of v is 1.
  void normalize(SparseVec<Elem>& v, SparseVec<Elem>& tag) const;

 private:
  std::uint32_t p_;
};

/// Deterministic prime in (2^30, 2^31) derived from `seed`.
std::uint32_t random_prime(std::uint64_t seed);
bool is_prime_u32(std::uint32_t n);

/// alpha*v + beta*w.
template <class A>
SparseVec<typename A::Elem> combine(const A& ar, const typename A::Elem& alpha, const SparseVec<typename A::Elem>& v,
                                    const typename A::Elem& beta, const SparseVec<typename A::Elem>& w) {
  SparseVec<typename A::Elem> out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      auto x = ar.mul(alpha, v[i].second);
      if (!ar.is_zero(x)) out.emplace_back(v[i].first, std::move(x));
      ++i;
    } else if (i == v.size() || w[j].first < v[i].first) {
      auto x = ar.mul(beta, w[j].second);
      if (!ar.is_zero(x)) out.emplace_back(w[j].first, std::move(x));
      ++j;
    } else {
      auto x = ar.add(ar.mul(alpha, v[i].second), ar.mul(beta, w[j].second));
      if (!ar.is_zero(x)) out.emplace_back(v[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class A>
SparseVec<typename A::Elem> scale(const A& ar, const typename A::Elem& c, const SparseVec<typename A::Elem>& v) {
  SparseVec<typename A::Elem> out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) {
    auto y = ar.mul(c, x);
    if (!ar.is_zero(y)) out.emplace_back(i, std::move(y));
  }
  return out;
}

template <class A>
typename A::Elem entry(const A& ar, const SparseVec<typename A::Elem>& v, std::uint32_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const auto& p, std::uint32_t k) { return p.first < k; });
  if (it != v.end() && it->first == index) return it->second;
  return ar.from_int(0);
}

/// Image of v under the matrix with the given columns.
template <class A>
SparseVec<typename A::Elem> apply_columns(const A& ar, const std::vector<SparseVec<typename A::Elem>>& cols,
                                          const SparseVec<typename A::Elem>& v) {
  using E = typename A::Elem;
  std::map<std::uint32_t, E> acc;
  for (const auto& [s, c] : v)
    for (const auto& [t, x] : cols[s]) {
      auto [it, fresh] = acc.try_emplace(t, ar.mul(c, x));
      if (!fresh) it->second = ar.add(it->second, ar.mul(c, x));
    }
  SparseVec<E> out;
  for (auto& [t, x] : acc)
    if (!ar.is_zero(x)) out.emplace_back(t, std::move(x));
  return out;
}

/// Row echelon form over the policy A. Every stored row is a combination of
/// inserted vectors; with tags enabled, `tag` records that combination in
/// the caller's tag coordinates (row = sum tag_j * inserted_j).
template <class A>
class Echelon {
 public:
  using E = typename A::Elem;
  using Vec = SparseVec<E>;
  struct Row {
    Vec v;
    Vec tag;
  };

  Echelon(A ar, std::uint32_t dim) : ar_(std::move(ar)), dim_(dim), pivot_row_(dim, -1) {}

  const A& arith() const { return ar_; }
  std::uint32_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }

  /// Reduces v (and its tag). Returns true if the rank grew. Otherwise the
  /// fully reduced tag, a relation sum tag_j * inserted_j = 0, is written to
  /// `relation` when given.
  bool insert(Vec v, Vec tag = {}, Vec* relation = nullptr);

  /// Normal form of v modulo the row space, up to a nonzero scalar (exactly
  /// the normal form for ModArith). `tag` follows the same operations.
  Vec reduce(Vec v, Vec* tag = nullptr) const;

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Fully reduced basis: integer rows with content 1 and positive pivots,
  /// or pivot 1 over the prime field. Sorted by pivot column.
  std::vector<Vec> canonical_basis() const;

 private:
  void eliminate(Vec& v, Vec* tag, std::size_t& pos, const Row& row) const;

  A ar_;
  std::uint32_t dim_;
  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_row_;
};

extern template class Echelon<IntegerArith>;
extern template class Echelon<ModArith>;

/// Clears denominators: returns the primitive integer multiple of v.
ZVec primitive_integer(const QVec& v);
QVec to_rational(const ZVec& v);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::uint32_t rows, std::uint32_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix from_dense(const std::vector<std::vector<mpq_class>>& rows);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  std::size_t nnz() const;

  void set(std::uint32_t r, std::uint32_t c, const mpq_class& value);
  mpq_class get(std::uint32_t r, std::uint32_t c) const;
  const QVec& column(std::uint32_t c) const { return columns_.at(c); }
  void set_column(std::uint32_t c, QVec col);

  QVec apply(const QVec& x) const;
  SparseMatrix transpose() const;
  SparseMatrix multiply(const SparseMatrix& other) const;
  bool is_zero() const { return nnz() == 0; }

  /// Integer columns after multiplying the whole matrix by the lcm of all
  /// denominators. Rank, image and kernel are unchanged by that scaling.
  std::vector<ZVec> integer_columns() const;

 private:
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<QVec> columns_;
};

/// Reduced subspace of Q^ambient_dim.
class Subspace {
 public:
  explicit Subspace(std::uint32_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}
  static Subspace span(std::uint32_t ambient_dim, const std::vector<QVec>& vectors);
  static Subspace full(std::uint32_t ambient_dim);

  std::uint32_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ZVec>& basis() const { return basis_; }
  bool contains(const QVec& v) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::uint32_t ambient_dim_;
  std::vector<ZVec> basis_;
};

std::size_t rank(const SparseMatrix& a);
std::size_t rank_mod(const SparseMatrix& a, std::uint32_t prime);

struct MultiModularRank {
  std::size_t rank = 0;
  std::vector<std::uint32_t> primes;
  std::vector<std::size_t> modular_ranks;
  bool exact_fallback = false;
};

/// Ranks modulo `num_primes` primes drawn from `seed`; if they disagree the
/// exact rank is computed and returned.
MultiModularRank rank_multimodular(const SparseMatrix& a, std::uint64_t seed, int num_primes = 2);

Subspace kernel(const SparseMatrix& a);
Subspace image(const SparseMatrix& a);

/// Some x with a*x - b in `modulo`, or nullopt.
std::optional<QVec> solve_into(const SparseMatrix& a, const QVec& b, const Subspace& modulo);

std::size_t quotient_dim(std::uint32_t ambient_dim, const Subspace& rel);

}  // namespace kspec
