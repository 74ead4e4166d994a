#include "kspec/decomp.hpp"

#include <algorithm>
#include <map>

namespace kspec {

const char* to_string(SingularityType t) { return t == SingularityType::I ? "I" : "II"; }

long InvariantTable::at(const std::vector<long>& seq, int k) const {
  if (k < 0) return 0;
  if (k > k_max) throw std::out_of_range("degree outside the computed window");
  return seq.at(k);
}

std::uint64_t redraw_seed(std::uint64_t seed, int attempt) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt);
}

template <class A>
long tau(Cohomology<A>& coh) {
  const int k_max = coh.window().k_max();
  const long a = coh.mu(k_max - 1), b = coh.mu(k_max);
  if (a != b)
    throw NotStabilized("mu_" + std::to_string(k_max - 1) + " = " + std::to_string(a) + " but mu_" +
                        std::to_string(k_max) + " = " + std::to_string(b) + "; enlarge the window");
  return b;
}

int stabilization_offset(int n, int d, int k, int k_max) {
  int p = std::max(n * d - k, 1);
  return std::max(std::min(p, k_max - k), 0);
}

namespace {

// mu'' for every degree with one y. The multiplication matrices are shared.
template <class A>
std::vector<long> mu_free_all(Cohomology<A>& coh, const std::vector<std::int64_t>& y) {
  using Vec = SparseVec<typename A::Elem>;
  const KoszulWindow& win = coh.window();
  const int n = win.n(), d = win.d(), k_max = win.k_max();
  const A& ar = coh.arith();
  std::map<int, std::vector<Vec>> mult;
  auto mult_cols = [&](int k) -> const std::vector<Vec>& {
    auto it = mult.find(k);
    if (it != mult.end()) return it->second;
    std::vector<Vec> cols;
    for (const auto& c : win.multiply_columns(y, k)) cols.push_back(coh.convert(c));
    return mult.emplace(k, std::move(cols)).first->second;
  };
  std::vector<long> out(k_max + 1, 0);
  for (int k = 0; k <= k_max; ++k) {
    const auto& jac = coh.ideal(k);
    const std::uint32_t dim = win.basis(n, k).size();
    if (dim == jac.rank()) continue;
    std::vector<Vec> vecs;
    for (std::uint32_t c = 0; c < dim; ++c)
      if (!jac.is_pivot(c)) vecs.push_back(Vec{{c, ar.from_int(1)}});
    const int p = stabilization_offset(n, d, k, k_max);
    Vec scratch;
    for (int s = 0; s < p; ++s) {
      const auto& cols = mult_cols(k + s);
      const auto& next = coh.ideal(k + s + 1);
      for (auto& v : vecs) {
        v = next.reduce(apply_columns(ar, cols, v));
        if constexpr (A::kExact) ar.normalize(v, scratch);
      }
    }
    Echelon<A> img(ar, win.basis(n, k + p).size());
    for (auto& v : vecs)
      if (!v.empty()) img.insert(std::move(v));
    out[k] = static_cast<long>(img.rank());
  }
  return out;
}

}  // namespace

template <class A>
long mu_free(Cohomology<A>& coh, const std::vector<std::int64_t>& y, int k) {
  const KoszulWindow& win = coh.window();
  if (k < 0 || k > win.k_max()) throw std::out_of_range("degree outside the computed window");
  return mu_free_all(coh, y)[k];
}

template <class A>
std::pair<long, long> mu_split(Cohomology<A>& coh, const std::vector<std::int64_t>& y, int k) {
  const long free = mu_free(coh, y, k);
  return {coh.mu(k) - free, free};
}

template <class A>
InvariantTable compute_table(Cohomology<A>& coh, std::uint64_t seed, int max_redraws) {
  const KoszulWindow& win = coh.window();
  InvariantTable tab;
  tab.n = win.n();
  tab.d = win.d();
  tab.k_max = win.k_max();
  tab.gamma = gamma_series(tab.n, tab.d, tab.k_max);
  tab.mu.resize(tab.k_max + 1);
  tab.nu.resize(tab.k_max + 1);
  for (int k = 0; k <= tab.k_max; ++k) {
    tab.mu[k] = coh.mu(k);
    tab.nu[k] = coh.nu(k);
  }
  tab.tau = tau(coh);
  tab.type = classify_type(tab);
  for (int attempt = 0; attempt <= max_redraws; ++attempt) {
    tab.seed = redraw_seed(seed, attempt);
    tab.y = generic_linear_form(tab.n, tab.seed);
    tab.draws = attempt + 1;
    tab.mu_free = mu_free_all(coh, tab.y);
    tab.mu_torsion.resize(tab.k_max + 1);
    for (int k = 0; k <= tab.k_max; ++k) tab.mu_torsion[k] = tab.mu[k] - tab.mu_free[k];
    if (genericity_ok(tab)) return tab;
  }
  throw GenericityFailure("no linear form passed the duality checks after " + std::to_string(max_redraws + 1) +
                          " draws");
}

namespace {

struct Checker {
  CorollaryReport& rep;
  void expect(bool ok, const std::string& id, int k, const std::string& detail) {
    ++rep.checks;
    if (!ok) {
      rep.pass = false;
      rep.violations.push_back({id, k, detail});
    }
  }
};

std::string eq(long a, long b) { return std::to_string(a) + " != " + std::to_string(b); }

void check_cor23(const InvariantTable& t, Checker& c) {
  const int nd = t.n * t.d;
  for (int k = 0; k <= t.k_max; ++k) {
    const int m = nd - k;
    if (m > t.k_max) continue;
    const long lhs2 = t.at(t.mu_free, k) + t.at(t.nu, m);
    c.expect(lhs2 == t.tau, "mu''-nu-duality", k, "mu''_k + nu_{nd-k} = " + eq(lhs2, t.tau));
    const long rhs3 = t.at(t.mu, k) + t.at(t.mu, m) - t.at(t.gamma, k) - t.tau;
    c.expect(t.at(t.mu_torsion, k) == rhs3, "mu'-formula", k, "mu'_k = " + eq(t.at(t.mu_torsion, k), rhs3));
  }
}

}  // namespace

bool genericity_ok(const InvariantTable& tab) {
  CorollaryReport rep;
  Checker c{rep};
  check_cor23(tab, c);
  return rep.pass;
}

CorollaryReport verify_corollaries(const InvariantTable& t) {
  CorollaryReport rep;
  Checker c{rep};
  const int nd = t.n * t.d;
  for (int k = 0; k <= t.k_max; ++k) {
    c.expect(t.mu[k] == t.mu_torsion[k] + t.mu_free[k], "mu-split", k, "mu = mu' + mu''");
    c.expect(t.mu[k] == t.nu[k] + t.gamma[k], "mu-nu-gamma", k, "mu = nu + gamma: " + eq(t.mu[k], t.nu[k] + t.gamma[k]));
    c.expect(t.mu_torsion[k] >= 0 && t.mu_free[k] >= 0 && t.nu[k] >= 0, "nonneg", k, "negative dimension");
    const int m = nd - k;
    if (m <= t.k_max)
      c.expect(t.mu_torsion[k] == t.at(t.mu_torsion, m), "mu'-symmetry", k,
               "mu'_k vs mu'_{nd-k}: " + eq(t.mu_torsion[k], t.at(t.mu_torsion, m)));
    if (k > 0) {
      c.expect(t.mu_free[k] >= t.mu_free[k - 1], "monotone-mu''", k, "mu'' decreases");
      c.expect(t.nu[k] >= t.nu[k - 1], "monotone-nu", k, "nu decreases");
    }
    if (k <= t.d) c.expect(t.nu[k] == 0, "nu-low", k, "nu_k != 0 for k <= d");
  }
  check_cor23(t, c);
  const int top = std::min(nd, t.k_max);
  for (int k = 0; k <= top; ++k) {
    const int m = nd - k;
    if (m > t.k_max) continue;
    const long lhs = t.gamma[k] - t.mu_torsion[k];
    const long rhs = t.mu_free[k] + t.at(t.mu_free, m) - t.tau;
    c.expect(lhs == rhs, "gamma-balance", k, "gamma_k - mu'_k vs mu''_k + mu''_{nd-k} - tau: " + eq(lhs, rhs));
    rep.balance_lhs.push_back(lhs);
    rep.balance_rhs.push_back(rhs);
    if (lhs < 0 || rhs < 0) {
      rep.balance_nonnegative = false;
      rep.balance_negative_degrees.push_back(k);
    }
  }
  if (t.tau > 0) {
    c.expect(t.mu[t.k_max] == t.tau && t.nu[t.k_max] == t.tau, "top", t.k_max, "mu, nu != tau at the window top");
  } else {
    for (int k = 0; k <= t.k_max; ++k) c.expect(t.nu[k] == 0 && t.mu_free[k] == 0, "smooth", k, "tau = 0 but nu or mu'' nonzero");
  }
  return rep;
}

void require(const CorollaryReport& rep) {
  if (!rep.violations.empty()) {
    const auto& v = rep.violations.front();
    throw IdentityViolation(v.id, v.k, v.detail);
  }
}

SingularityType classify_type(const InvariantTable& tab) {
  const int nd = tab.n * tab.d;
  for (int k = 0; 2 * k <= nd && k <= tab.k_max; ++k)
    if (tab.nu[k] != 0) return SingularityType::II;
  return SingularityType::I;
}

CheckReport check_lemma21(const InvariantTable& tab, int r_span) {
  CheckReport rep;
  if (tab.tau == 0) {
    rep.detail = "tau = 0, no singular points";
    return rep;
  }
  const long a = tab.at(tab.mu_free, tab.n), b = tab.at(tab.mu_free, tab.n + 1);
  rep.pass = a == 1 && b >= r_span;
  rep.detail = "mu''_n = " + std::to_string(a) + ", mu''_{n+1} = " + std::to_string(b) + ", r = " + std::to_string(r_span);
  return rep;
}

CheckReport check_nodal_vanishing(const InvariantTable& tab) {
  CheckReport rep;
  const int n1 = (tab.n - 1) / 2;
  const int bound = (n1 + 1) * tab.d - (tab.n % 2 == 1 ? 1 : 0);
  for (int k = 0; k <= std::min(bound, tab.k_max); ++k)
    if (tab.nu[k] != 0) {
      rep.pass = false;
      rep.detail = "nu_" + std::to_string(k) + " = " + std::to_string(tab.nu[k]) + " within the nodal range k <= " +
                   std::to_string(bound);
      return rep;
    }
  rep.detail = "nu_k = 0 for k <= " + std::to_string(bound);
  return rep;
}

template <class A>
std::vector<int> syzygy_degrees(Cohomology<A>& coh) {
  const KoszulWindow& win = coh.window();
  const int n = win.n(), d = win.d();
  std::vector<int> out;
  for (int s = 0; s <= d - 2; ++s) {
    const int big_k = s + n - 1 + d;
    if (big_k > win.k_max()) break;
    const long cycles = static_cast<long>(win.basis(n - 1, big_k - d).size()) - static_cast<long>(coh.wedge_rank(n - 1, big_k));
    if (cycles > 0) out.push_back(s);
  }
  return out;
}

template <class A>
CheckReport check_relation_detector(Cohomology<A>& coh, const InvariantTable& tab) {
  CheckReport rep;
  const auto degs = syzygy_degrees(coh);
  if (degs.empty()) {
    rep.detail = "no syzygy of degree <= d-2";
    return rep;
  }
  for (int s : degs) {
    const int k = tab.d + tab.n + s - 1;
    if (k > tab.k_max) continue;
    if (tab.nu[k] == 0) {
      rep.pass = false;
      rep.detail = "syzygy of degree " + std::to_string(s) + " but nu_" + std::to_string(k) + " = 0";
      return rep;
    }
  }
  rep.detail = "lowest syzygy degree " + std::to_string(degs.front()) + ", nu_" +
               std::to_string(tab.d + tab.n + degs.front() - 1) + " != 0";
  return rep;
}

#define KSPEC_INSTANTIATE(A)                                                                     \
  template long tau(Cohomology<A>&);                                                             \
  template long mu_free(Cohomology<A>&, const std::vector<std::int64_t>&, int);                  \
  template std::pair<long, long> mu_split(Cohomology<A>&, const std::vector<std::int64_t>&, int); \
  template InvariantTable compute_table(Cohomology<A>&, std::uint64_t, int);                     \
  template std::vector<int> syzygy_degrees(Cohomology<A>&);                                      \
  template CheckReport check_relation_detector(Cohomology<A>&, const InvariantTable&);

KSPEC_INSTANTIATE(IntegerArith)
KSPEC_INSTANTIATE(ModArith)
#undef KSPEC_INSTANTIATE

}  // namespace kspec
