#pragma once

// Closed forms for binary forms, Thom-Sebastiani sums and the special
// families x1^a x2^(d-a) + sum x_i^d and f in fewer variables. Used as
// independent oracles for the general engine.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kspec/decomp.hpp"
#include "kspec/polespec.hpp"
#include "kspec/poly.hpp"

namespace kspec {

/// f = prod g_i^{m_i} with pairwise non-proportional linear g_i.
class BinaryFormFactorization {
 public:
  using Linear = std::array<Rational, 2>;  // g = a x + b y

  /// Multiplicities only; enough for every closed form here.
  explicit BinaryFormFactorization(std::vector<int> multiplicities);
  /// Explicit rational linear factors.
  BinaryFormFactorization(std::vector<Linear> forms, std::vector<int> multiplicities);

  /// "x:2,y:2" or "x-2*y:1,x+y:3" in the variables x, y.
  static BinaryFormFactorization parse(const std::string& text);

  int d() const;
  int r() const { return static_cast<int>(mult_.size()); }
  int e() const;
  int tau() const { return d() - r(); }
  const std::vector<int>& multiplicities() const { return mult_; }
  bool has_forms() const { return !forms_.empty(); }
  const std::vector<Linear>& forms() const { return forms_; }

  /// Product of the factors; requires explicit forms.
  HomogeneousPoly to_poly() const;

 private:
  std::vector<Linear> forms_;
  std::vector<int> mult_;
};

/// Coefficients c_0..c_window of a power series; higher terms are dropped.
class Series {
 public:
  static constexpr int kInf = -1;

  explicit Series(int window = 0) : c_(window + 1, 0) {}
  Series(int window, std::vector<long> coeff);

  /// sum_{k=a}^{b} t^k, b = kInf for an infinite tail; 0 if a > b.
  static Series S(int a, int b, int window);
  static Series monomial(int k, long c, int window);
  static Series from_sequence(const std::vector<long>& seq, int window);

  int window() const { return static_cast<int>(c_.size()) - 1; }
  long at(int k) const { return k >= 0 && k <= window() ? c_[k] : 0; }
  const std::vector<long>& coefficients() const { return c_; }

  Series operator*(const Series& o) const;
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series pow(int e) const;
  friend bool operator==(const Series&, const Series&) = default;

  std::string to_string() const;

 private:
  std::vector<long> c_;
};

/// S(mu'), S(mu''), S(nu) over one window.
struct SeriesBundle {
  Series mu_torsion, mu_free, nu;
  Series mu() const { return mu_torsion + mu_free; }
};

SeriesBundle bundle_of(const InvariantTable& tab);

/// Tables of a binary form from the clamped formulas.
InvariantTable lemma23_table(const BinaryFormFactorization& fac, int k_max);

/// S(mu') = S(1,r-1) S(d-r+1,d-1), S(mu'') = S(1,inf) S(1,d-r), S(nu) = S(d+r-1,inf) S(1,d-r).
/// The nu shift is the one of the clamped formula nu_k = (k-d-r+1)_[0,tau].
SeriesBundle binary_series(int d, int r, int window);

/// S(mu) = t^2 (1 - 2 t^{d-1} + t^{d+r-2}) / (1-t)^2.
Series binary_euler_series(int d, int r, int window);

/// f1(x1,x2) with r components plus an isolated f2 in n-2 further variables.
SeriesBundle binary_plus_isolated_series(int d, int r, int n, int window);

/// x1^a x2^(d-a) + x3^d + ... + xn^d; independent of a.
SeriesBundle monomial_plus_powers_series(int d, int n, int window);

/// f of degree d in n-1 of the n variables with an isolated singularity.
InvariantTable degenerate_variable_oracle(int d, int n, int k_max);

/// Multiplicities n^j_{f,alpha} at alpha = K/d, K = k + q d in [1, 2d].
struct BinarySpectrum {
  int d = 0;
  std::vector<long> n0, n1;  // indexed by K, size 2d + 1
  long total(int K) const { return n0.at(K) - n1.at(K); }
};
BinarySpectrum prop33_spectrum(const BinaryFormFactorization& fac);

/// Sp_P^0 and Sp_P^1 of a binary form; Sp_P = Sp_P^0 - Sp_P^1.
struct BinaryPoleSpectrum {
  PoleSpectrum sp0, sp1;
  PoleSpectrum total() const;
};
BinaryPoleSpectrum prop34_parts(const BinaryFormFactorization& fac);
PoleSpectrum prop34_polespec(const BinaryFormFactorization& fac);

/// Sp_P of x_1^d + ... + x_m^d, i.e. the Milnor algebra read at exponents k/d.
PoleSpectrum isolated_polespec(int d, int m);

/// Sp_P(f1 + f2) = Sp_P(f1) Sp_P(f2) for f2 isolated, same degree d.
PoleSpectrum ts_product(const PoleSpectrum& a, const PoleSpectrum& b);
/// Tables of f1 + f2 from those of f1 and S(mu'_(2)) of the isolated f2.
SeriesBundle ts_product(const SeriesBundle& a, const Series& mu_torsion_2);

}  // namespace kspec
