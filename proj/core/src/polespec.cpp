#include "kspec/polespec.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <sstream>

namespace kspec {

bool operator==(const SpectrumTerm& a, const SpectrumTerm& b) {
  return a.k == b.k && a.exponent == b.exponent && a.multiplicity == b.multiplicity;
}

bool operator==(const PoleSpectrum& a, const PoleSpectrum& b) {
  return a.d == b.d && a.support == b.support && a.truncated == b.truncated;
}

long PoleSpectrum::at(int k) const {
  for (const auto& t : support)
    if (t.k == k) return t.multiplicity;
  return 0;
}

std::string PoleSpectrum::to_string() const {
  if (support.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : support) {
    long m = t.multiplicity;
    if (first) {
      if (m < 0) os << "-";
    } else {
      os << (m < 0 ? " - " : " + ");
    }
    first = false;
    const long a = m < 0 ? -m : m;
    const bool unit = t.exponent == 0;
    if (a != 1 || unit) os << a;
    if (unit) continue;
    if (a != 1) os << "*";
    os << "t";
    if (t.exponent == 1) continue;
    if (t.exponent.get_den() == 1)
      os << "^" << t.exponent.get_num().get_str();
    else
      os << "^(" << rational_to_string(t.exponent) << ")";
  }
  return os.str();
}

PoleSpectrum PoleSpectrum::from_coefficients(int d, const std::vector<long>& coeff, int valid_top) {
  PoleSpectrum sp;
  sp.d = d;
  sp.valid_top = valid_top;
  for (int k = 0; k < static_cast<int>(coeff.size()) && k <= valid_top; ++k) {
    if (coeff[k] == 0) continue;
    Rational e(k, d);
    e.canonicalize();
    sp.support.push_back({k, std::move(e), coeff[k]});
  }
  return sp;
}

long TorsionProfile::total(int q) const {
  long s = 0;
  for (const auto& row : by_stage)
    if (q >= 0 && q < static_cast<int>(row.size())) s += row[q];
  return s;
}

bool TorsionProfile::all_zero() const {
  for (const auto& row : by_stage)
    for (long x : row)
      if (x != 0) return false;
  return true;
}

long SpectralResult::mu_at(int r, int k) const {
  if (k < 0) return 0;
  if (k > k_max) throw std::out_of_range("degree outside window");
  r = std::clamp(r, 1, static_cast<int>(mu_r.size()) - 1);
  return mu_r[r][k];
}

long SpectralResult::nu_at(int r, int k) const {
  if (k < 0) return 0;
  if (k > k_max) throw std::out_of_range("degree outside window");
  r = std::clamp(r, 1, static_cast<int>(nu_r.size()) - 1);
  return nu_r[r][k];
}

long SpectralResult::euler_sum(int r, int top) const {
  long s = 0;
  for (int k = 0; k <= std::min(top, k_max); ++k) s += mu_at(r, k) - nu_at(r, k);
  return s;
}

namespace {

// Tags of the chains being reduced at one source; far above any basis index.
constexpr std::uint32_t kChainTag = 0x80000000u;

template <class A>
void remove_content(const A&, std::vector<SparseVec<typename A::Elem>>& xs) {
  if constexpr (A::kExact) {
    mpz_class g = 0;
    for (const auto& v : xs)
      for (const auto& [i, x] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
      }
    if (g <= 1) return;
    for (auto& v : xs)
      for (auto& [i, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

template <class A>
class Engine {
 public:
  using E = typename A::Elem;
  using Vec = SparseVec<E>;

  struct Chain {
    std::vector<Vec> xi;  // xi[i] in Omega^{n-1}_{k-d-id}
  };

  struct Target {
    std::unique_ptr<Echelon<A>> rel;  // Rel^(r)_q; tags: sources of df^, then cols + j for images
    std::uint32_t cols = 0;
    std::vector<Chain> images;  // chain behind each inserted image
  };

  Engine(Cohomology<A>& coh, const SpectralOptions& opt)
      : coh_(coh), win_(coh.window()), ar_(coh.arith()), opt_(opt), n_(win_.n()), d_(win_.d()), k_max_(win_.k_max()) {}

  int n() const { return n_; }
  int d() const { return d_; }
  int k_max() const { return k_max_; }

  // Cycles independent modulo boundaries, one chain of length 1 each.
  void seed(int k) {
    std::vector<Vec> cyc = coh_.cycles(k);
    if (opt_.permute_seed) perturb(cyc, k);
    const long want = coh_.nu(k);
    auto& out = live_[k];
    out.clear();
    if (want == 0) return;
    Echelon<A> bnd = coh_.boundaries(k);
    for (auto& z : cyc) {
      if (bnd.insert(z)) out.push_back(Chain{{z}});
      if (static_cast<long>(out.size()) == want) break;
    }
    if (static_cast<long>(out.size()) != want)
      throw std::logic_error("cycle representatives do not match nu at k=" + std::to_string(k));
  }

  void check_closed(int k) {
    const int q = k - d_;
    if (q < n_) return;
    const auto& dc = deriv(q);
    const Echelon<A>& jac = coh_.ideal(q);
    for (const auto& row : coh_.boundaries(k).rows())
      if (!jac.contains(apply_columns(ar_, dc, row.v)))
        throw WellDefinednessViolation("d(B_" + std::to_string(k) + ") is not inside the jacobian image in degree " +
                                       std::to_string(q));
  }

  // Applies d^(r) to the chains at source k; returns the rank and extends
  // the surviving chains to length r + 1.
  long step(int r, int k) {
    auto it = live_.find(k);
    if (it == live_.end() || it->second.empty()) return 0;
    std::vector<Chain>& chains = it->second;
    for (const auto& c : chains)
      if (static_cast<int>(c.xi.size()) != r) throw std::logic_error("chain length does not match stage");
    const int q = k - r * d_;
    if (q < n_) {
      for (auto& c : chains) c.xi.emplace_back();
      return 0;
    }
    Target& tgt = target(q);
    const auto& dc = deriv(q);
    const std::uint32_t dim = win_.basis(n_, q).size();
    Echelon<A> local(ar_, dim);
    std::vector<Vec> values(chains.size());
    std::vector<char> independent(chains.size(), 0);
    std::vector<Vec> relations;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      values[i] = apply_columns(ar_, dc, chains[i].xi.back());
      Vec tag{{kChainTag + static_cast<std::uint32_t>(i), ar_.from_int(1)}};
      Vec rem = tgt.rel->reduce(values[i], &tag);
      Vec rel;
      if (local.insert(std::move(rem), std::move(tag), &rel))
        independent[i] = 1;
      else
        relations.push_back(std::move(rel));
    }

    std::vector<Chain> next;
    next.reserve(relations.size());
    for (const auto& rel : relations) {
      Chain nc;
      nc.xi.assign(r + 1, Vec{});
      Vec last;
      for (const auto& [idx, c] : rel) {
        if (idx >= kChainTag) {
          const Chain& src = chains[idx - kChainTag];
          for (int p = 0; p < r; ++p) nc.xi[p] = combine(ar_, ar_.from_int(1), nc.xi[p], c, src.xi[p]);
        } else if (idx >= tgt.cols) {
          const Chain& img = tgt.images.at(idx - tgt.cols);
          const int s = static_cast<int>(img.xi.size());
          for (int t = 0; t < s; ++t) {
            const int p = r - s + t;
            nc.xi[p] = combine(ar_, ar_.from_int(1), nc.xi[p], c, img.xi[t]);
          }
        } else {
          last.emplace_back(idx, ar_.neg(c));
        }
      }
      nc.xi[r] = std::move(last);
      remove_content(ar_, nc.xi);
      next.push_back(std::move(nc));
    }

    long rank = 0;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      if (!independent[i]) continue;
      ++rank;
      const auto slot = tgt.cols + static_cast<std::uint32_t>(tgt.images.size());
      if (!tgt.rel->insert(values[i], Vec{{slot, ar_.from_int(1)}}))
        throw LiftFailure("image of d^(" + std::to_string(r) + ") collapsed in degree " + std::to_string(q));
      tgt.images.push_back(chains[i]);
    }
    chains = std::move(next);
    return rank;
  }

  const std::vector<Chain>& chains(int k) { return live_[k]; }
  const Echelon<A>& relations(int q) { return *target(q).rel; }
  bool any_live() const {
    for (const auto& [k, v] : live_)
      if (!v.empty()) return true;
    return false;
  }

 private:
  const std::vector<Vec>& deriv(int m) {
    auto it = deriv_.find(m);
    if (it != deriv_.end()) return it->second;
    std::vector<Vec> cols;
    for (const auto& c : win_.derivative_columns(n_ - 1, m)) cols.push_back(coh_.convert(c));
    return deriv_.emplace(m, std::move(cols)).first->second;
  }

  Target& target(int q) {
    auto it = targets_.find(q);
    if (it != targets_.end()) return it->second;
    Target t;
    t.rel = std::make_unique<Echelon<A>>(coh_.jacobian(q));
    t.cols = win_.basis(n_ - 1, q - d_).size();
    return targets_.emplace(q, std::move(t)).first->second;
  }

  // Reorders the cycles and adds random boundaries and earlier cycles, so the
  // representatives of N_k change while their span does not.
  void perturb(std::vector<Vec>& cyc, int k) {
    std::mt19937_64 rng(*opt_.permute_seed + static_cast<std::uint64_t>(k));
    std::shuffle(cyc.begin(), cyc.end(), rng);
    const auto& brows = coh_.boundaries(k).rows();
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (!brows.empty()) {
        const auto& b = brows[rng() % brows.size()].v;
        cyc[i] = combine(ar_, ar_.from_int(1), cyc[i], ar_.from_int(1 + static_cast<long>(rng() % 3)), b);
      }
      if (i > 0) cyc[i] = combine(ar_, ar_.from_int(1), cyc[i], ar_.from_int(static_cast<long>(rng() % 3)), cyc[i - 1]);
    }
  }

  Cohomology<A>& coh_;
  const KoszulWindow& win_;
  A ar_;
  SpectralOptions opt_;
  int n_, d_, k_max_;
  std::map<int, std::vector<Vec>> deriv_;
  std::map<int, Target> targets_;
  std::map<int, std::vector<Chain>> live_;
};

Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

int default_max_stage(int n, int d, int k_max) { return std::max(1, (k_max - n) / d); }

}  // namespace

template <class A>
void check_boundaries_closed(Cohomology<A>& coh, int k) {
  Engine<A> eng(coh, {});
  eng.check_closed(k);
}

template <class A>
D1Result<A> d1_rank(Cohomology<A>& coh, int k) {
  if (k > coh.window().k_max()) throw std::out_of_range("degree outside window");
  Engine<A> eng(coh, {});
  eng.check_closed(k);
  D1Result<A> out;
  eng.seed(k);
  out.rank = eng.step(1, k);
  for (const auto& c : eng.chains(k)) out.kernel.push_back(c.xi.front());
  const int q = k - coh.window().d();
  if (q >= coh.window().n()) out.relations = eng.relations(q).canonical_basis();
  return out;
}

template <class A>
SpectralResult spectral_sequence(Cohomology<A>& coh, const SpectralOptions& opt) {
  Engine<A> eng(coh, opt);
  const int n = eng.n(), d = eng.d(), k_max = eng.k_max();
  SpectralResult sr;
  sr.n = n;
  sr.d = d;
  sr.k_max = k_max;
  sr.max_stage = opt.max_stage ? std::max(1, *opt.max_stage) : default_max_stage(n, d, k_max);
  const int R = sr.max_stage;

  const int lo = n - 1 + d;  // lowest k with Omega^{n-1}_{k-d} != 0
  sr.mu_r.assign(R + 2, std::vector<long>(k_max + 1, 0));
  sr.nu_r = sr.mu_r;
  sr.rank.assign(R + 1, std::vector<long>(k_max + 1, 0));
  for (int k = 0; k <= k_max; ++k) {
    sr.mu_r[1][k] = coh.mu(k);
    sr.nu_r[1][k] = k >= lo ? coh.nu(k) : 0;
  }
  for (int k = std::max(lo, 0); k <= k_max; ++k) {
    if (opt.check_well_defined) eng.check_closed(k);
    eng.seed(k);
  }

  for (int r = 1; r <= R; ++r) {
    sr.mu_r[r + 1] = sr.mu_r[r];
    sr.nu_r[r + 1] = sr.nu_r[r];
    if (!eng.any_live()) continue;
    for (int k = std::max(lo, 0); k <= k_max; ++k) {
      const long rk = eng.step(r, k);
      if (rk == 0) continue;
      const int q = k - r * d;
      sr.rank[r][q] = rk;
      sr.mu_r[r + 1][q] -= rk;
      sr.nu_r[r + 1][k] -= rk;
      if (r >= 2) sr.r_eff = r;
    }
  }

  sr.degenerate = sr.r_eff == 1;
  sr.torsion.k_max = k_max;
  for (int r = 2; r <= R; ++r) sr.torsion.by_stage.push_back(sr.rank[r]);

  const int re = sr.r_eff;
  const int top = k_max - re * d;
  std::vector<long> coeff(k_max + 1, 0);
  for (int k = 0; k <= k_max; ++k) coeff[k] = sr.mu_r[re + 1][k] - sr.nu_r[re + 1][k];
  sr.spectrum = PoleSpectrum::from_coefficients(d, coeff, top);
  sr.spectrum.stabilization_stage = re;
  bool trunc = top < n * d || (top >= 0 && sr.mu_r[re + 1][top] != 0);
  for (int k = std::max(top + 1, 0); k <= k_max; ++k)
    if (sr.nu_r[re + 1][k] != 0) trunc = true;
  sr.spectrum.truncated = trunc;
  return sr;
}

BoundReport check_exponent_bounds(const InvariantTable& tab, const SpectralResult& sr, const Rational& alpha_min,
                                  const std::optional<std::vector<Rational>>& local_exponents) {
  BoundReport rep;
  const int n = tab.n, d = tab.d;
  auto fail = [&](const std::string& id, int k, const std::string& detail) {
    rep.pass = false;
    rep.violations.push_back({id, k, detail});
  };
  if (n == 3) {
    for (int p = 0; p + d <= tab.k_max; ++p) {
      if (Rational(p) >= d * alpha_min) break;
      ++rep.checks;
      if (tab.nu[p + d] != 0) fail("nu-vanishing", p + d, "nu = " + std::to_string(tab.nu[p + d]) + " below d*alpha'");
    }
  } else {
    rep.skipped.push_back("nu-vanishing: needs n = 3");
  }
  if (local_exponents) {
    for (int p = 0; p + d <= tab.k_max; ++p) {
      const Rational e = frac(p, d);
      long cnt = 0;
      for (const auto& a : *local_exponents)
        if (a == e) ++cnt;
      ++rep.checks;
      const long v = sr.nu_at(2, p + d);
      if (v > cnt)
        fail("nu2-exponent-count", p + d, "nu^(2) = " + std::to_string(v) + " > " + std::to_string(cnt));
    }
  } else {
    rep.skipped.push_back("nu2-exponent-count: no local exponents given");
  }
  const Rational cap = std::min(alpha_min, Rational(1));
  for (int p = 1; p <= sr.spectrum.valid_top; ++p) {
    if (frac(p, d) >= cap) break;
    ++rep.checks;
    const long want = binomial(p - 1, n - 1), got = sr.spectrum.at(p);
    if (want != got)
      fail("low-degree-spectrum", p,
           "multiplicity " + std::to_string(got) + " != C(p-1, n-1) = " + std::to_string(want));
  }
  return rep;
}

void require(const BoundReport& rep) {
  if (rep.pass) return;
  const auto& v = rep.violations.front();
  throw BoundViolation(v.id + " at k=" + std::to_string(v.k) + ": " + v.detail);
}

#define KSPEC_INSTANTIATE(A)                                                                   \
  template D1Result<A> d1_rank<A>(Cohomology<A>&, int);                                       \
  template void check_boundaries_closed<A>(Cohomology<A>&, int);                              \
  template SpectralResult spectral_sequence<A>(Cohomology<A>&, const SpectralOptions&);

KSPEC_INSTANTIATE(IntegerArith)
KSPEC_INSTANTIATE(ModArith)

#undef KSPEC_INSTANTIATE

}  // namespace kspec
