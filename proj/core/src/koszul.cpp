#include "kspec/koszul.hpp"

#include <bit>
#include <sstream>

namespace kspec {

long binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

namespace {

void monomials_rec(int n, int var, int left, Exponent& cur, std::vector<Exponent>& out) {
  if (var == n - 1) {
    cur[var] = left;
    out.push_back(cur);
    return;
  }
  for (int a = left; a >= 0; --a) {
    cur[var] = a;
    monomials_rec(n, var + 1, left - a, cur, out);
  }
}

void subsets_rec(int n, int j, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == j) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, j, i + 1, cur, out);
    cur.pop_back();
  }
}

void accumulate_into(std::map<std::uint32_t, mpz_class>& acc, std::uint32_t idx, const mpz_class& v) {
  auto [it, fresh] = acc.try_emplace(idx, v);
  if (!fresh) it->second += v;
}

ZVec flatten(std::map<std::uint32_t, mpz_class>& acc) {
  ZVec out;
  out.reserve(acc.size());
  for (auto& [i, v] : acc)
    if (sgn(v) != 0) out.emplace_back(i, std::move(v));
  return out;
}

}  // namespace

std::vector<Exponent> monomials(int n, int deg) {
  std::vector<Exponent> out;
  if (deg < 0 || n < 1) return out;
  Exponent cur(n, 0);
  monomials_rec(n, 0, deg, cur, out);
  return out;
}

int wedge_sign(int i, unsigned mask) { return (std::popcount(mask & ((1u << i) - 1u)) & 1) ? -1 : 1; }

GradedBasis::GradedBasis(int n, int j, int k) : n_(n), j_(j), k_(k), set_pos_(1u << n, -1) {
  if (j < 0 || j > n) return;
  std::vector<int> cur;
  subsets_rec(n, j, 0, cur, sets_);
  for (std::size_t s = 0; s < sets_.size(); ++s) {
    unsigned m = 0;
    for (int i : sets_[s]) m |= 1u << i;
    masks_.push_back(m);
    set_pos_[m] = static_cast<int>(s);
  }
  monos_ = kspec::monomials(n, k - j);
  for (std::size_t i = 0; i < monos_.size(); ++i) mono_pos_.emplace(monos_[i], static_cast<std::uint32_t>(i));
}

std::uint32_t GradedBasis::index_of(unsigned mask, const Exponent& e) const {
  const int s = set_pos_.at(mask);
  auto it = mono_pos_.find(e);
  if (s < 0 || it == mono_pos_.end()) throw std::out_of_range("item not in graded basis");
  return static_cast<std::uint32_t>(s) * static_cast<std::uint32_t>(monos_.size()) + it->second;
}

std::string GradedBasis::item_to_string(std::uint32_t item, const std::vector<std::string>& vars) const {
  std::ostringstream os;
  const Exponent& e = exponent_of(item);
  bool wrote = false;
  for (int i = 0; i < n_; ++i) {
    if (e[i] == 0) continue;
    if (wrote) os << "*";
    os << vars.at(i);
    if (e[i] > 1) os << "^" << e[i];
    wrote = true;
  }
  const auto& set = index_set_of(item);
  if (!wrote && set.empty()) os << "1";
  for (int i : set) {
    if (wrote) os << " ";
    os << "d" << vars.at(i);
    wrote = true;
  }
  return os.str();
}

// ---- window ----------------------------------------------------------------

KoszulWindow::KoszulWindow(const HomogeneousPoly& f, int k_max)
    : f_(f.primitive()), n_(f.num_vars()), d_(f.degree()), k_max_(k_max) {
  if (n_ > 16) throw std::invalid_argument("too many variables");
  for (const auto& p : f_.partials()) {
    std::vector<std::pair<Exponent, mpz_class>> terms;
    for (const auto& [e, c] : p.terms()) terms.emplace_back(e, c.get_num());
    partials_.push_back(std::move(terms));
  }
}

KoszulWindow::KoszulWindow(const HomogeneousPoly& f) : KoszulWindow(f, f.num_vars() * f.degree() + f.degree()) {}

const GradedBasis& KoszulWindow::basis(int j, int k) const {
  auto& slot = bases_[{j, k}];
  if (!slot) slot = std::make_unique<GradedBasis>(n_, j, k);
  return *slot;
}

const std::vector<ZVec>& KoszulWindow::wedge_columns(int j, int k) const {
  auto it = wedge_.find({j, k});
  if (it != wedge_.end()) return it->second;
  std::vector<ZVec> cols;
  if (j >= 0 && j < n_) {
    const GradedBasis& src = basis(j, k - d_);
    const GradedBasis& dst = basis(j + 1, k);
    cols.reserve(src.size());
    Exponent m(n_);
    for (std::uint32_t s = 0; s < src.size(); ++s) {
      const unsigned mask = src.mask_of(s);
      const Exponent& e = src.exponent_of(s);
      std::map<std::uint32_t, mpz_class> acc;
      for (int i = 0; i < n_; ++i) {
        if (mask & (1u << i)) continue;
        const int sign = wedge_sign(i, mask);
        for (const auto& [pe, c] : partials_[i]) {
          for (int t = 0; t < n_; ++t) m[t] = e[t] + pe[t];
          accumulate_into(acc, dst.index_of(mask | (1u << i), m), sign > 0 ? c : mpz_class(-c));
        }
      }
      cols.push_back(flatten(acc));
    }
  }
  return wedge_.emplace(std::make_pair(j, k), std::move(cols)).first->second;
}

const std::vector<ZVec>& KoszulWindow::derivative_columns(int j, int k) const {
  auto it = deriv_.find({j, k});
  if (it != deriv_.end()) return it->second;
  std::vector<ZVec> cols;
  if (j >= 0 && j < n_) {
    const GradedBasis& src = basis(j, k);
    const GradedBasis& dst = basis(j + 1, k);
    cols.reserve(src.size());
    for (std::uint32_t s = 0; s < src.size(); ++s) {
      const unsigned mask = src.mask_of(s);
      Exponent e = src.exponent_of(s);
      std::map<std::uint32_t, mpz_class> acc;
      for (int i = 0; i < n_; ++i) {
        if ((mask & (1u << i)) || e[i] == 0) continue;
        const long coef = static_cast<long>(e[i]) * wedge_sign(i, mask);
        --e[i];
        accumulate_into(acc, dst.index_of(mask | (1u << i), e), mpz_class(coef));
        ++e[i];
      }
      cols.push_back(flatten(acc));
    }
  }
  return deriv_.emplace(std::make_pair(j, k), std::move(cols)).first->second;
}

std::vector<ZVec> KoszulWindow::multiply_columns(const std::vector<std::int64_t>& y, int k) const {
  const GradedBasis& src = basis(n_, k);
  const GradedBasis& dst = basis(n_, k + 1);
  const unsigned full = (1u << n_) - 1u;
  std::vector<ZVec> cols;
  cols.reserve(src.size());
  for (std::uint32_t s = 0; s < src.size(); ++s) {
    Exponent e = src.exponent_of(s);
    std::map<std::uint32_t, mpz_class> acc;
    for (int i = 0; i < n_; ++i) {
      if (y[i] == 0) continue;
      ++e[i];
      accumulate_into(acc, dst.index_of(full, e), mpz_class(static_cast<long>(y[i])));
      --e[i];
    }
    cols.push_back(flatten(acc));
  }
  return cols;
}

namespace {

ZVec apply_columns(const std::vector<ZVec>& cols, const ZVec& form) {
  std::map<std::uint32_t, mpz_class> acc;
  for (const auto& [s, c] : form)
    for (const auto& [t, v] : cols.at(s)) accumulate_into(acc, t, c * v);
  return flatten(acc);
}

}  // namespace

ZVec KoszulWindow::wedge_apply(int j, int k, const ZVec& form) const { return apply_columns(wedge_columns(j, k), form); }

ZVec KoszulWindow::derivative_apply(int j, int k, const ZVec& form) const {
  return apply_columns(derivative_columns(j, k), form);
}

SparseMatrix build_wedge(const HomogeneousPoly& f, int j, int k) {
  const int n = f.num_vars(), d = f.degree();
  GradedBasis src(n, j, k - d), dst(n, j + 1, k);
  SparseMatrix m(dst.size(), src.size());
  if (j < 0 || j >= n) return m;
  const auto parts = f.partials();
  Exponent mono(n);
  for (std::uint32_t s = 0; s < src.size(); ++s) {
    const unsigned mask = src.mask_of(s);
    const Exponent& e = src.exponent_of(s);
    std::map<std::uint32_t, Rational> acc;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) continue;
      const int sign = wedge_sign(i, mask);
      for (const auto& [pe, c] : parts[i].terms()) {
        for (int t = 0; t < n; ++t) mono[t] = e[t] + pe[t];
        acc[dst.index_of(mask | (1u << i), mono)] += sign * c;
      }
    }
    QVec col;
    for (auto& [t, v] : acc)
      if (v != 0) col.emplace_back(t, v);
    m.set_column(s, std::move(col));
  }
  return m;
}

// ---- cohomology ------------------------------------------------------------

template <class A>
std::size_t Cohomology<A>::wedge_rank(int j, int k) {
  const int n = win_.n(), d = win_.d();
  if (j < 0 || j >= n || k - d < j) return 0;
  if (auto it = ranks_.find({j, k}); it != ranks_.end()) return it->second;
  std::size_t r;
  if (j == n - 1) {
    r = ideal(k).rank();
  } else {
    Echelon<A> e(ar_, win_.basis(j + 1, k).size());
    for (const auto& col : win_.wedge_columns(j, k)) e.insert(convert(col));
    r = e.rank();
  }
  ranks_[{j, k}] = r;
  return r;
}

template <class A>
long Cohomology<A>::mu(int k) {
  const int n = win_.n();
  return static_cast<long>(win_.basis(n, k).size()) - static_cast<long>(wedge_rank(n - 1, k));
}

template <class A>
long Cohomology<A>::nu(int k) {
  const int n = win_.n(), d = win_.d();
  return static_cast<long>(win_.basis(n - 1, k - d).size()) - static_cast<long>(wedge_rank(n - 1, k)) -
         static_cast<long>(wedge_rank(n - 2, k - d));
}

template <class A>
long Cohomology<A>::h_minus2(int k) {
  const int n = win_.n(), d = win_.d();
  return static_cast<long>(win_.basis(n - 2, k - 2 * d).size()) - static_cast<long>(wedge_rank(n - 2, k - d)) -
         static_cast<long>(wedge_rank(n - 3, k - 2 * d));
}

template <class A>
void Cohomology<A>::build_jacobian(int k) {
  const int n = win_.n();
  auto e = std::make_unique<Echelon<A>>(ar_, win_.basis(n, k).size());
  std::vector<Vec> cyc;
  const auto& cols = win_.wedge_columns(n - 1, k);
  for (std::uint32_t s = 0; s < cols.size(); ++s) {
    Vec rel;
    if (!e->insert(convert(cols[s]), Vec{{s, ar_.from_int(1)}}, &rel)) cyc.push_back(std::move(rel));
  }
  ranks_[{n - 1, k}] = e->rank();
  jac_[k] = std::move(e);
  cyc_[k] = std::move(cyc);
}

template <class A>
const Echelon<A>& Cohomology<A>::jacobian(int k) {
  if (!jac_.count(k)) build_jacobian(k);
  return *jac_[k];
}

template <class A>
const Echelon<A>& Cohomology<A>::ideal(int k) {
  if (auto it = jac_.find(k); it != jac_.end()) return *it->second;
  auto& slot = plain_[k];
  if (!slot) {
    const int n = win_.n();
    slot = std::make_unique<Echelon<A>>(ar_, win_.basis(n, k).size());
    for (const auto& col : win_.wedge_columns(n - 1, k)) slot->insert(convert(col));
  }
  return *slot;
}

template <class A>
const std::vector<typename Cohomology<A>::Vec>& Cohomology<A>::cycles(int k) {
  if (!jac_.count(k)) build_jacobian(k);
  return cyc_[k];
}

template <class A>
const Echelon<A>& Cohomology<A>::boundaries(int k) {
  auto& slot = bnd_[k];
  if (!slot) {
    const int n = win_.n(), d = win_.d();
    slot = std::make_unique<Echelon<A>>(ar_, win_.basis(n - 1, k - d).size());
    if (n >= 2)
      for (const auto& col : win_.wedge_columns(n - 2, k - d)) slot->insert(convert(col));
    ranks_[{n - 2, k - d}] = slot->rank();
  }
  return *slot;
}

template class Cohomology<IntegerArith>;
template class Cohomology<ModArith>;

std::vector<long> gamma_series(int n, int d, int k_max) {
  std::vector<long> out(std::max(k_max + 1, 0), 0);
  if (k_max < 0 || d < 2) return out;
  std::vector<long> poly{1};
  for (int i = 0; i < n; ++i) {
    std::vector<long> next(poly.size() + d - 2, 0);
    for (std::size_t a = 0; a < poly.size(); ++a)
      for (int b = 0; b <= d - 2; ++b) next[a + b] += poly[a];
    poly = std::move(next);
  }
  for (std::size_t a = 0; a < poly.size(); ++a)
    if (static_cast<int>(a) + n <= k_max) out[a + n] = poly[a];
  return out;
}

template <class A>
AssumptionReport assumption_evidence(Cohomology<A>& coh) {
  AssumptionReport rep;
  const int k_max = coh.window().k_max();
  rep.h_minus2.assign(k_max + 1, 0);
  for (int k = 0; k <= k_max; ++k) {
    rep.h_minus2[k] = coh.h_minus2(k);
    if (rep.h_minus2[k] != 0 && rep.pass) {
      rep.pass = false;
      rep.first_bad_degree = k;
      rep.reason = "H^-2 nonzero in degree " + std::to_string(k);
    }
  }
  rep.stabilized = k_max >= 1 && coh.mu(k_max - 1) == coh.mu(k_max);
  if (!rep.stabilized && rep.pass) {
    rep.pass = false;
    rep.first_bad_degree = k_max;
    rep.reason = "mu not stable at the top of the window";
  }
  return rep;
}

template AssumptionReport assumption_evidence(Cohomology<IntegerArith>&);
template AssumptionReport assumption_evidence(Cohomology<ModArith>&);

}  // namespace kspec
