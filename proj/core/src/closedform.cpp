#include "kspec/closedform.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kspec {

// ---- binary forms ------------------------------------------------------------

BinaryFormFactorization::BinaryFormFactorization(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
  if (mult_.empty()) throw std::invalid_argument("binary form needs at least one factor");
  for (int m : mult_)
    if (m < 1) throw std::invalid_argument("multiplicities must be >= 1");
}

BinaryFormFactorization::BinaryFormFactorization(std::vector<Linear> forms, std::vector<int> multiplicities)
    : BinaryFormFactorization(std::move(multiplicities)) {
  if (forms.size() != mult_.size()) throw std::invalid_argument("one multiplicity per linear factor");
  for (const auto& g : forms)
    if (g[0] == 0 && g[1] == 0) throw std::invalid_argument("zero linear factor");
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (forms[i][0] * forms[j][1] - forms[i][1] * forms[j][0] == 0)
        throw std::invalid_argument("linear factors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                    " are proportional");
  forms_ = std::move(forms);
}

BinaryFormFactorization BinaryFormFactorization::parse(const std::string& text) {
  std::vector<Linear> forms;
  std::vector<int> mult;
  const std::vector<std::string> vars{"x", "y"};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.rfind(':');
    std::string lin = item.substr(0, colon);
    int m = 1;
    if (colon != std::string::npos) {
      const std::string ms = item.substr(colon + 1);
      std::size_t used = 0;
      try {
        m = std::stoi(ms, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || ms.find_first_not_of(" \t", used) != std::string::npos)
        throw ParseError(ParseError::Kind::Syntax, "bad multiplicity in '" + item + "'");
    }
    const HomogeneousPoly g = parse_poly(lin, vars);
    if (g.degree() != 1) throw ParseError(ParseError::Kind::NotHomogeneous, "factor '" + lin + "' is not linear");
    Linear coef{Rational(0), Rational(0)};
    for (const auto& [e, c] : g.terms()) coef[e[0] == 1 ? 0 : 1] = c;
    forms.push_back(coef);
    mult.push_back(m);
  }
  if (forms.empty()) throw ParseError(ParseError::Kind::Syntax, "empty binary form");
  try {
    return BinaryFormFactorization(std::move(forms), std::move(mult));
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseError::Kind::Syntax, e.what());
  }
}

int BinaryFormFactorization::d() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

int BinaryFormFactorization::e() const {
  int g = 0;
  for (int m : mult_) g = std::gcd(g, m);
  return g;
}

HomogeneousPoly BinaryFormFactorization::to_poly() const {
  if (!has_forms()) throw std::logic_error("factorization has no explicit linear forms");
  std::optional<HomogeneousPoly> acc;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    TermMap t;
    if (forms_[i][0] != 0) t[{1, 0}] = forms_[i][0];
    if (forms_[i][1] != 0) t[{0, 1}] = forms_[i][1];
    HomogeneousPoly g(2, t);
    for (int j = 0; j < mult_[i]; ++j) acc = acc ? *acc * g : g;
  }
  return *acc;
}

// ---- series ------------------------------------------------------------------

Series::Series(int window, std::vector<long> coeff) : c_(std::move(coeff)) { c_.resize(window + 1, 0); }

Series Series::S(int a, int b, int window) {
  Series s(window);
  if (b != kInf && a > b) return s;
  const int hi = b == kInf ? window : std::min(b, window);
  for (int k = std::max(a, 0); k <= hi; ++k) s.c_[k] = 1;
  return s;
}

Series Series::monomial(int k, long c, int window) {
  Series s(window);
  if (k >= 0 && k <= window) s.c_[k] = c;
  return s;
}

Series Series::from_sequence(const std::vector<long>& seq, int window) {
  Series s(window);
  for (int k = 0; k <= window && k < static_cast<int>(seq.size()); ++k) s.c_[k] = seq[k];
  return s;
}

Series Series::operator*(const Series& o) const {
  const int w = std::min(window(), o.window());
  Series s(w);
  for (int i = 0; i <= w; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= w; ++j) s.c_[i + j] += c_[i] * o.c_[j];
  }
  return s;
}

Series Series::operator+(const Series& o) const {
  const int w = std::min(window(), o.window());
  Series s(w);
  for (int i = 0; i <= w; ++i) s.c_[i] = c_[i] + o.c_[i];
  return s;
}

Series Series::operator-(const Series& o) const {
  const int w = std::min(window(), o.window());
  Series s(w);
  for (int i = 0; i <= w; ++i) s.c_[i] = c_[i] - o.c_[i];
  return s;
}

Series Series::pow(int e) const {
  Series s = monomial(0, 1, window());
  for (int i = 0; i < e; ++i) s = s * *this;
  return s;
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= window(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << (c_[k] < 0 ? " - " : " + ");
    else if (c_[k] < 0) os << "-";
    first = false;
    const long a = std::labs(c_[k]);
    if (k == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "t";
    if (k != 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

SeriesBundle bundle_of(const InvariantTable& tab) {
  return {Series::from_sequence(tab.mu_torsion, tab.k_max), Series::from_sequence(tab.mu_free, tab.k_max),
          Series::from_sequence(tab.nu, tab.k_max)};
}

// ---- n = 2 tables ------------------------------------------------------------

namespace {

long clamp_to(long x, long lo, long hi) { return std::min(std::max(x, lo), hi); }

long l23_torsion(int d, int r, int k) { return std::max<long>(r - 1 - std::abs(d - k), 0); }
long l23_free(int tau, int k) { return clamp_to(k - 1, 0, tau); }
long l23_nu(int d, int r, int tau, int k) { return clamp_to(k - d - r + 1, 0, tau); }

}  // namespace

InvariantTable lemma23_table(const BinaryFormFactorization& fac, int k_max) {
  const int d = fac.d(), r = fac.r(), tau = fac.tau();
  InvariantTable t;
  t.n = 2;
  t.d = d;
  t.k_max = k_max;
  t.tau = tau;
  t.gamma = gamma_series(2, d, k_max);
  for (int k = 0; k <= k_max; ++k) {
    t.mu_torsion.push_back(l23_torsion(d, r, k));
    t.mu_free.push_back(l23_free(tau, k));
    t.nu.push_back(l23_nu(d, r, tau, k));
    t.mu.push_back(t.mu_torsion.back() + t.mu_free.back());
  }
  t.type = classify_type(t);
  return t;
}

SeriesBundle binary_series(int d, int r, int window) {
  using S = Series;
  return {S::S(1, r - 1, window) * S::S(d - r + 1, d - 1, window),
          S::S(1, S::kInf, window) * S::S(1, d - r, window),
          S::S(d + r - 1, S::kInf, window) * S::S(1, d - r, window)};
}

Series binary_euler_series(int d, int r, int window) {
  Series num = Series::monomial(2, 1, window) + Series::monomial(d + 1, -2, window) +
               Series::monomial(d + r, 1, window);
  std::vector<long> c(window + 1);  // 1/(1-t)^2
  for (int j = 0; j <= window; ++j) c[j] = j + 1;
  return num * Series(window, c);
}

SeriesBundle binary_plus_isolated_series(int d, int r, int n, int window) {
  const Series iso = Series::S(1, d - 1, window).pow(n - 2);
  SeriesBundle b = binary_series(d, r, window);
  return {b.mu_torsion * iso, b.mu_free * iso, b.nu * iso};
}

SeriesBundle monomial_plus_powers_series(int d, int n, int window) {
  using S = Series;
  const S iso = S::S(1, d - 1, window).pow(n - 2);
  return {S::monomial(d, 1, window) * iso, S::S(1, S::kInf, window) * S::S(1, d - 2, window) * iso,
          S::S(d + 1, S::kInf, window) * S::S(1, d - 2, window) * iso};
}

InvariantTable degenerate_variable_oracle(int d, int n, int k_max) {
  using S = Series;
  const S iso = S::S(1, d - 1, k_max).pow(n - 1);
  const S mu = S::S(1, S::kInf, k_max) * iso;
  const S nu = S::S(d, S::kInf, k_max) * iso;
  InvariantTable t;
  t.n = n;
  t.d = d;
  t.k_max = k_max;
  long tau = 1;
  for (int i = 0; i < n - 1; ++i) tau *= d - 1;
  t.tau = tau;
  t.gamma = gamma_series(n, d, k_max);
  t.mu = mu.coefficients();
  t.mu_free = t.mu;
  t.mu_torsion.assign(k_max + 1, 0);
  t.nu = nu.coefficients();
  t.type = classify_type(t);
  return t;
}

// ---- n = 2 spectra -----------------------------------------------------------

BinarySpectrum prop33_spectrum(const BinaryFormFactorization& fac) {
  const int d = fac.d(), r = fac.r(), e = fac.e();
  BinarySpectrum sp;
  sp.d = d;
  sp.n0.assign(2 * d + 1, 0);
  sp.n1.assign(2 * d + 1, 0);
  for (int q = 0; q <= 1; ++q)
    for (int k = 1; k <= d; ++k) {
      const int K = k + q * d;
      if (K >= 2 * d) continue;  // alpha in (0, 2)
      long ceil_sum = 0;
      for (int m : fac.multiplicities()) ceil_sum += (static_cast<long>(k) * m + d - 1) / d;
      if (q == 0) {
        sp.n0[K] = r - 1 + k - ceil_sum;
      } else {
        sp.n0[K] = std::max<long>(-k - 1 + ceil_sum, 0);
        if ((static_cast<long>(k) * e) % d == 0) sp.n1[K] = 1;
      }
    }
  return sp;
}

PoleSpectrum BinaryPoleSpectrum::total() const {
  std::vector<long> c(3 * sp0.d + 1, 0);
  for (const auto& t : sp0.support) c.at(t.k) += t.multiplicity;
  for (const auto& t : sp1.support) c.at(t.k) -= t.multiplicity;
  PoleSpectrum out = PoleSpectrum::from_coefficients(sp0.d, c, 2 * sp0.d);
  out.truncated = sp0.truncated || sp1.truncated;
  return out;
}

BinaryPoleSpectrum prop34_parts(const BinaryFormFactorization& fac) {
  const int d = fac.d(), r = fac.r(), tau = fac.tau(), e = fac.e();
  const int top = 3 * d;
  std::vector<long> c0(top + 1, 0), c1(top + 1, 0);
  // mu_k - nu_{k+d} vanishes once both reach tau, well before 2d.
  for (int k = 0; k <= 2 * d; ++k)
    c0[k] = l23_torsion(d, r, k) + l23_free(tau, k) - l23_nu(d, r, tau, k + d);
  for (int i = 1; i < e; ++i) {
    c0[i * d / e] += 1;
    c1[d + i * d / e] += 1;
  }
  BinaryPoleSpectrum out;
  out.sp0 = PoleSpectrum::from_coefficients(d, c0, 2 * d);
  out.sp1 = PoleSpectrum::from_coefficients(d, c1, 2 * d);
  return out;
}

PoleSpectrum prop34_polespec(const BinaryFormFactorization& fac) { return prop34_parts(fac).total(); }

PoleSpectrum isolated_polespec(int d, int m) {
  const int top = m * (d - 1);
  return PoleSpectrum::from_coefficients(d, gamma_series(m, d, top), top);
}

PoleSpectrum ts_product(const PoleSpectrum& a, const PoleSpectrum& b) {
  if (a.d != b.d) throw std::invalid_argument("Thom-Sebastiani product needs equal degrees");
  const int top = std::max(a.valid_top, 0) + std::max(b.valid_top, 0);
  std::vector<long> c(top + 1, 0);
  for (const auto& x : a.support)
    for (const auto& y : b.support)
      if (x.k + y.k <= top) c[x.k + y.k] += x.multiplicity * y.multiplicity;
  PoleSpectrum out = PoleSpectrum::from_coefficients(a.d, c, top);
  out.truncated = a.truncated || b.truncated;
  out.stabilization_stage = std::max(a.stabilization_stage, b.stabilization_stage);
  return out;
}

SeriesBundle ts_product(const SeriesBundle& a, const Series& mu_torsion_2) {
  return {a.mu_torsion * mu_torsion_2, a.mu_free * mu_torsion_2, a.nu * mu_torsion_2};
}

}  // namespace kspec
