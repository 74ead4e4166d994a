#include "kspec/linalg.hpp"

#include <map>
#include <random>

namespace kspec {

// ---- arithmetic policies ---------------------------------------------------

void IntegerArith::elim_coeffs(const Elem& pivot, const Elem& a, Elem& alpha, Elem& beta) const {
  mpz_class g = gcd(pivot, a);
  alpha = pivot / g;
  beta = a / g;
}

bool IntegerArith::prefer(const Elem& incoming, const Elem& resident) const {
  return mpz_sizeinbase(incoming.get_mpz_t(), 2) < mpz_sizeinbase(resident.get_mpz_t(), 2);
}

void IntegerArith::normalize(SparseVec<Elem>& v, SparseVec<Elem>& tag) const {
  mpz_class g = 0;
  for (const auto& [i, x] : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  if (g != 1)
    for (const auto& [i, x] : tag) {
      g = gcd(g, x);
      if (g == 1) break;
    }
  const auto& lead = v.empty() ? tag : v;
  const bool flip = !lead.empty() && sgn(lead.front().second) < 0;
  if (g == 0) return;
  if (g == 1 && !flip) return;
  if (flip) g = -g;
  for (auto& [i, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (auto& [i, x] : tag) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

ModArith::Elem ModArith::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

ModArith::Elem ModArith::from_mpz(const mpz_class& v) const {
  return static_cast<Elem>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

ModArith::Elem ModArith::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Elem>(result);
}

void ModArith::elim_coeffs(Elem pivot, Elem a, Elem& alpha, Elem& beta) const {
  alpha = 1;
  beta = pivot == 1 ? a : mul(a, inv(pivot));
}

void ModArith::normalize(SparseVec<Elem>& v, SparseVec<Elem>& tag) const {
  if (v.empty() || v.front().second == 1) return;
  const Elem c = inv(v.front().second);
  for (auto& [i, x] : v) x = mul(x, c);
  for (auto& [i, x] : tag) x = mul(x, c);
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u})
    if (n % q == 0) return n == q;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases 2, 3, 5, 7 are deterministic below 3215031751.
  for (std::uint64_t a : {2u, 3u, 5u, 7u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t random_prime(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    std::uint32_t c = (1u << 30) + static_cast<std::uint32_t>(rng() % (1u << 30));
    c |= 1u;
    if (c > (1u << 30) && is_prime_u32(c)) return c;
  }
}

// ---- echelon ---------------------------------------------------------------

template <class A>
void Echelon<A>::eliminate(Vec& v, Vec* tag, std::size_t& pos, const Row& row) const {
  E alpha, beta;
  ar_.elim_coeffs(row.v.front().second, v[pos].second, alpha, beta);
  const E nbeta = ar_.neg(beta);
  v = combine(ar_, alpha, v, nbeta, row.v);
  if (tag) *tag = combine(ar_, alpha, *tag, nbeta, row.tag);
}

template <class A>
typename Echelon<A>::Vec Echelon<A>::reduce(Vec v, Vec* tag) const {
  std::size_t pos = 0;
  int steps = 0;
  Vec scratch;
  while (pos < v.size()) {
    const std::int32_t r = pivot_row_[v[pos].first];
    if (r < 0) {
      ++pos;
      continue;
    }
    eliminate(v, tag, pos, rows_[r]);
    if constexpr (A::kExact) {
      if (++steps % 16 == 0) ar_.normalize(v, tag ? *tag : scratch);
    }
  }
  return v;
}

template <class A>
bool Echelon<A>::insert(Vec v, Vec tag, Vec* relation) {
  std::size_t pos = 0;
  int steps = 0;
  while (pos < v.size()) {
    const std::uint32_t c = v[pos].first;
    const std::int32_t r = pivot_row_[c];
    if (r < 0) {
      ++pos;
      continue;
    }
    if (pos == 0 && ar_.prefer(v[0].second, rows_[r].v.front().second)) {
      // Keep the smaller pivot resident and carry on with the old row.
      ar_.normalize(v, tag);
      std::swap(v, rows_[r].v);
      std::swap(tag, rows_[r].tag);
    }
    eliminate(v, &tag, pos, rows_[r]);
    if constexpr (A::kExact) {
      if (++steps % 16 == 0) ar_.normalize(v, tag);
    }
  }
  ar_.normalize(v, tag);
  if (v.empty()) {
    if (relation) *relation = std::move(tag);
    return false;
  }
  pivot_row_[v.front().first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(Row{std::move(v), std::move(tag)});
  return true;
}

template <class A>
std::vector<typename Echelon<A>::Vec> Echelon<A>::canonical_basis() const {
  std::vector<const Row*> order;
  order.reserve(rows_.size());
  for (const auto& row : rows_) order.push_back(&row);
  std::sort(order.begin(), order.end(),
            [](const Row* a, const Row* b) { return a->v.front().first > b->v.front().first; });
  std::vector<Vec> reduced(dim_);
  std::vector<char> have(dim_, 0);
  std::vector<Vec> out;
  Vec no_tag;
  for (const Row* row : order) {
    Vec v = row->v;
    std::size_t pos = 1;
    while (pos < v.size()) {
      const std::uint32_t c = v[pos].first;
      if (!have[c]) {
        ++pos;
        continue;
      }
      E alpha, beta;
      ar_.elim_coeffs(reduced[c].front().second, v[pos].second, alpha, beta);
      v = combine(ar_, alpha, v, ar_.neg(beta), reduced[c]);
    }
    ar_.normalize(v, no_tag);
    const std::uint32_t p = v.front().first;
    reduced[p] = v;
    have[p] = 1;
  }
  for (std::uint32_t c = 0; c < dim_; ++c)
    if (have[c]) out.push_back(std::move(reduced[c]));
  return out;
}

template class Echelon<IntegerArith>;
template class Echelon<ModArith>;

// ---- conversions -----------------------------------------------------------

ZVec primitive_integer(const QVec& v) {
  mpz_class den = 1, g = 0;
  for (const auto& [i, x] : v) den = lcm(den, x.get_den());
  ZVec out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) {
    mpz_class z = x.get_num() * (den / x.get_den());
    g = gcd(g, z);
    out.emplace_back(i, std::move(z));
  }
  if (g > 1)
    for (auto& [i, x] : out) x /= g;
  return out;
}

QVec to_rational(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, mpq_class(x));
  return out;
}

// ---- matrices --------------------------------------------------------------

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<mpq_class>>& rows) {
  const auto r = static_cast<std::uint32_t>(rows.size());
  const auto c = r ? static_cast<std::uint32_t>(rows[0].size()) : 0u;
  SparseMatrix m(r, c);
  for (std::uint32_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged dense matrix");
    for (std::uint32_t j = 0; j < c; ++j)
      if (rows[i][j] != 0) m.columns_[j].emplace_back(i, rows[i][j]);
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t s = 0;
  for (const auto& col : columns_) s += col.size();
  return s;
}

void SparseMatrix::set(std::uint32_t r, std::uint32_t c, const mpq_class& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& p, std::uint32_t k) { return p.first < k; });
  if (it != col.end() && it->first == r) {
    if (value == 0)
      col.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    col.insert(it, {r, value});
  }
}

mpq_class SparseMatrix::get(std::uint32_t r, std::uint32_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& p, std::uint32_t k) { return p.first < k; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

void SparseMatrix::set_column(std::uint32_t c, QVec col) {
  if (c >= cols_) throw std::out_of_range("matrix column");
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::erase_if(col, [](const auto& p) { return p.second == 0; });
  for (const auto& [r, x] : col)
    if (r >= rows_) throw std::out_of_range("matrix row");
  columns_[c] = std::move(col);
}

QVec SparseMatrix::apply(const QVec& x) const {
  std::map<std::uint32_t, mpq_class> acc;
  for (const auto& [j, xj] : x) {
    if (j >= cols_) throw std::out_of_range("vector index");
    for (const auto& [i, a] : columns_[j]) acc[i] += a * xj;
  }
  QVec out;
  for (auto& [i, v] : acc)
    if (v != 0) out.emplace_back(i, v);
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::uint32_t j = 0; j < cols_; ++j)
    for (const auto& [i, a] : columns_[j]) t.columns_[i].emplace_back(j, a);
  return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  SparseMatrix m(rows_, other.cols_);
  for (std::uint32_t j = 0; j < other.cols_; ++j) m.columns_[j] = apply(other.columns_[j]);
  return m;
}

std::vector<ZVec> SparseMatrix::integer_columns() const {
  mpz_class den = 1;
  for (const auto& col : columns_)
    for (const auto& [i, x] : col) den = lcm(den, x.get_den());
  std::vector<ZVec> out(cols_);
  for (std::uint32_t j = 0; j < cols_; ++j) {
    out[j].reserve(columns_[j].size());
    for (const auto& [i, x] : columns_[j]) out[j].emplace_back(i, x.get_num() * (den / x.get_den()));
  }
  return out;
}

// ---- subspaces -------------------------------------------------------------

namespace {

Echelon<IntegerArith> echelon_of(std::uint32_t dim, const std::vector<ZVec>& vecs) {
  Echelon<IntegerArith> e(IntegerArith{}, dim);
  for (const auto& v : vecs) e.insert(v);
  return e;
}

}  // namespace

Subspace Subspace::span(std::uint32_t ambient_dim, const std::vector<QVec>& vectors) {
  Echelon<IntegerArith> e(IntegerArith{}, ambient_dim);
  for (const auto& v : vectors) {
    for (const auto& [i, x] : v)
      if (i >= ambient_dim) throw std::out_of_range("vector outside ambient space");
    e.insert(primitive_integer(v));
  }
  Subspace s(ambient_dim);
  s.basis_ = e.canonical_basis();
  return s;
}

Subspace Subspace::full(std::uint32_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::uint32_t i = 0; i < ambient_dim; ++i) s.basis_.push_back(ZVec{{i, mpz_class(1)}});
  return s;
}

bool Subspace::contains(const QVec& v) const {
  return echelon_of(ambient_dim_, basis_).contains(primitive_integer(v));
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("subspaces of different ambient spaces");
  std::vector<ZVec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  Subspace s(ambient_dim_);
  s.basis_ = echelon_of(ambient_dim_, all).canonical_basis();
  return s;
}

// ---- matrix operations -----------------------------------------------------

std::size_t rank(const SparseMatrix& a) { return echelon_of(a.rows(), a.integer_columns()).rank(); }

std::size_t rank_mod(const SparseMatrix& a, std::uint32_t prime) {
  ModArith ar(prime);
  Echelon<ModArith> e(ar, a.rows());
  for (const auto& col : a.integer_columns()) {
    SparseVec<std::uint32_t> v;
    for (const auto& [i, x] : col)
      if (auto y = ar.from_mpz(x)) v.emplace_back(i, y);
    e.insert(std::move(v));
  }
  return e.rank();
}

MultiModularRank rank_multimodular(const SparseMatrix& a, std::uint64_t seed, int num_primes) {
  MultiModularRank out;
  std::uint32_t last = 0;
  for (int t = 0; t < num_primes; ++t) {
    std::uint32_t p = random_prime(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t));
    if (p == last) p = random_prime(seed ^ (0xD1B54A32D192ED03ULL + t));
    last = p;
    out.primes.push_back(p);
    out.modular_ranks.push_back(rank_mod(a, p));
  }
  const bool agree =
      std::all_of(out.modular_ranks.begin(), out.modular_ranks.end(), [&](std::size_t r) { return r == out.modular_ranks[0]; });
  if (agree && !out.modular_ranks.empty()) {
    out.rank = out.modular_ranks[0];
  } else {
    out.rank = rank(a);
    out.exact_fallback = true;
  }
  return out;
}

Subspace kernel(const SparseMatrix& a) {
  Echelon<IntegerArith> e(IntegerArith{}, a.rows());
  std::vector<QVec> ker;
  const auto cols = a.integer_columns();
  for (std::uint32_t j = 0; j < a.cols(); ++j) {
    ZVec rel;
    if (!e.insert(cols[j], ZVec{{j, mpz_class(1)}}, &rel)) ker.push_back(to_rational(rel));
  }
  return Subspace::span(a.cols(), ker);
}

Subspace image(const SparseMatrix& a) {
  std::vector<QVec> cols;
  for (std::uint32_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  return Subspace::span(a.rows(), cols);
}

std::optional<QVec> solve_into(const SparseMatrix& a, const QVec& b, const Subspace& modulo) {
  if (modulo.ambient_dim() != a.rows()) throw std::invalid_argument("modulo subspace has wrong ambient dimension");
  const std::uint32_t m = static_cast<std::uint32_t>(modulo.dim());
  const std::uint32_t slot = a.cols() + m;
  Echelon<IntegerArith> e(IntegerArith{}, a.rows());
  const auto cols = a.integer_columns();
  // Integer columns are den * A; track that factor when reading x back.
  mpz_class den = 1;
  for (std::uint32_t j = 0; j < a.cols(); ++j)
    for (const auto& [i, x] : a.column(j)) den = lcm(den, x.get_den());
  for (std::uint32_t j = 0; j < a.cols(); ++j) e.insert(cols[j], ZVec{{j, mpz_class(1)}});
  for (std::uint32_t i = 0; i < m; ++i) e.insert(modulo.basis()[i], ZVec{{a.cols() + i, mpz_class(1)}});

  mpz_class bden = 1;
  for (const auto& [i, x] : b) {
    if (i >= a.rows()) throw std::out_of_range("right-hand side index");
    bden = lcm(bden, x.get_den());
  }
  ZVec bz;
  for (const auto& [i, x] : b) bz.emplace_back(i, x.get_num() * (bden / x.get_den()));
  ZVec tag{{slot, mpz_class(1)}};
  if (!e.reduce(bz, &tag).empty()) return std::nullopt;

  // c * bden * b + sum_j t_j * den * A_j + (modulo part) = 0.
  const mpz_class c = entry(IntegerArith{}, tag, slot);
  QVec x;
  for (const auto& [j, t] : tag) {
    if (j >= a.cols()) break;
    mpq_class v(-t * den, c * bden);
    v.canonicalize();
    x.emplace_back(j, v);
  }
  return x;
}

std::size_t quotient_dim(std::uint32_t ambient_dim, const Subspace& rel) {
  if (rel.ambient_dim() != ambient_dim) throw std::invalid_argument("relation subspace has wrong ambient dimension");
  return ambient_dim - rel.dim();
}

}  // namespace kspec
