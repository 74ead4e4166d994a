#pragma once

// Pole order spectral sequence: the differentials d^(r) : N_k -> M_{k-rd},
// the subquotients M^(r), N^(r) and the pole order spectrum.
//
// A class in N^(r)_k is carried by a lift chain (xi_0, ..., xi_{r-1}) with
// xi_i in Omega^{n-1}_{k-d-id}, df^xi_0 = 0 and d xi_i = df^xi_{i+1}. Its
// image under d^(r) is the class of d xi_{r-1} in M^(r)_{k-rd}, where M^(r)
// is Omega^n modulo the jacobian image plus the images of d^(1..r-1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kspec/decomp.hpp"
#include "kspec/errors.hpp"
#include "kspec/koszul.hpp"

namespace kspec {

struct SpectrumTerm {
  int k = 0;            // exponent is k/d
  Rational exponent;
  long multiplicity = 0;
};
bool operator==(const SpectrumTerm& a, const SpectrumTerm& b);

struct PoleSpectrum {
  int d = 1;
  std::vector<SpectrumTerm> support;  // sorted by k, multiplicities nonzero
  bool truncated = false;
  int stabilization_stage = 1;  // r* with Sp_P read off from M^(r*+1), N^(r*+1)
  int valid_top = -1;           // largest k covered by the reported support

  long at(int k) const;
  /// e.g. "t^(3/4) + t - 2*t^2"
  std::string to_string() const;
  static PoleSpectrum from_coefficients(int d, const std::vector<long>& coeff, int valid_top);
};
bool operator==(const PoleSpectrum& a, const PoleSpectrum& b);

/// Image dimensions of d^(r) for r >= 2, by stage then target degree. By the
/// torsion formula these are dim Gr^K_{r-1} of the Brieskorn torsion.
struct TorsionProfile {
  int k_max = 0;
  std::vector<std::vector<long>> by_stage;  // [r - 2][q]
  long total(int q) const;
  bool all_zero() const;
};

struct SpectralResult {
  int n = 0, d = 0, k_max = 0;
  int max_stage = 0;
  // mu_r[r][k], nu_r[r][k] for r = 1..max_stage+1; index 0 unused.
  std::vector<std::vector<long>> mu_r, nu_r;
  // rank[r][q]: rank of d^(r) landing in degree q.
  std::vector<std::vector<long>> rank;
  int r_eff = 1;       // last stage with a nonzero differential (1 if none)
  bool degenerate = true;
  TorsionProfile torsion;
  PoleSpectrum spectrum;

  /// mu^(r)_k is reliable once all sources k + s d, s < r, lie in the window.
  bool mu_valid(int r, int k) const { return k + (r - 1) * d <= k_max; }
  long mu_at(int r, int k) const;
  long nu_at(int r, int k) const;
  /// Sum of mu^(r)_k - nu^(r)_k for k <= top.
  long euler_sum(int r, int top) const;
};

struct SpectralOptions {
  /// Highest stage; default floor((k_max - n) / d).
  std::optional<int> max_stage;
  /// Shuffle the initial cycle representatives (well-definedness tests).
  std::optional<std::uint64_t> permute_seed;
  /// Check d(B_k) inside the jacobian image before stage 1.
  bool check_well_defined = true;
};

/// Rank of d^(1) out of degree k with its kernel and the enlarged relation
/// space of M_{k-d}.
template <class A>
struct D1Result {
  long rank = 0;
  std::vector<SparseVec<typename A::Elem>> kernel;     // cycles in Omega^{n-1}_{k-d}, independent mod B_k
  std::vector<SparseVec<typename A::Elem>> relations;  // canonical basis of Rel^(2)_{k-d}
};

template <class A>
D1Result<A> d1_rank(Cohomology<A>& coh, int k);

/// Throws WellDefinednessViolation unless d(B_k) lies in the jacobian image.
template <class A>
void check_boundaries_closed(Cohomology<A>& coh, int k);

template <class A>
SpectralResult spectral_sequence(Cohomology<A>& coh, const SpectralOptions& opt = {});

struct BoundReport {
  bool pass = true;
  std::vector<Violation> violations;
  std::vector<std::string> skipped;
  int checks = 0;
};

/// nu_{p+d} = 0 for p < d*alpha_min (n = 3 only); nu^(2)_{p+d} <= #{local
/// exponents equal to p/d} when the exponents are given; and the spectrum
/// multiplicity C(p-1, n-1) at p/d < min(alpha_min, 1).
BoundReport check_exponent_bounds(const InvariantTable& tab, const SpectralResult& sr, const Rational& alpha_min,
                                  const std::optional<std::vector<Rational>>& local_exponents = std::nullopt);
/// Throws BoundViolation for the first violation.
void require(const BoundReport& rep);

}  // namespace kspec
