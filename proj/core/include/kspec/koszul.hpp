#pragma once

// Graded pieces of the Koszul complex (Omega^*, df^) of a homogeneous f and
// their cohomology dimensions mu_k = dim M_k, nu_k = dim N_k.
//
// Conventions: deg x_i = deg dx_i = 1, so Omega^j_k has basis
// x^e dx_I with |I| = j and |e| = k - j. Items are ordered by I (index sets
// in lexicographic order), then by e in descending lexicographic order.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kspec/linalg.hpp"
#include "kspec/poly.hpp"

namespace kspec {

/// Monomials of total degree `deg` in n variables, descending lex order.
std::vector<Exponent> monomials(int n, int deg);
long binomial(long a, long b);

class GradedBasis {
 public:
  GradedBasis(int n, int j, int k);

  int n() const { return n_; }
  int j() const { return j_; }
  int k() const { return k_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(sets_.size() * monos_.size()); }

  const std::vector<std::vector<int>>& index_sets() const { return sets_; }
  const std::vector<Exponent>& monomials() const { return monos_; }

  const std::vector<int>& index_set_of(std::uint32_t item) const { return sets_[item / monos_.size()]; }
  const Exponent& exponent_of(std::uint32_t item) const { return monos_[item % monos_.size()]; }

  /// Position of x^e dx_I; I given as a bitmask over variables.
  std::uint32_t index_of(unsigned mask, const Exponent& e) const;
  unsigned mask_of(std::uint32_t item) const { return masks_[item / monos_.size()]; }

  std::string item_to_string(std::uint32_t item, const std::vector<std::string>& vars) const;

 private:
  int n_, j_, k_;
  std::vector<std::vector<int>> sets_;
  std::vector<unsigned> masks_;
  std::vector<int> set_pos_;  // by mask, -1 if |mask| != j
  std::vector<Exponent> monos_;
  std::map<Exponent, std::uint32_t> mono_pos_;
};

/// sign(i, I) = (-1)^#{l in I : l < i}.
int wedge_sign(int i, unsigned mask);

/// Window of the complex for one f. Integer matrices are built from the
/// primitive integer multiple of f, which has the same cohomology.
class KoszulWindow {
 public:
  KoszulWindow(const HomogeneousPoly& f, int k_max);
  /// Default window k_max = n*d + d.
  explicit KoszulWindow(const HomogeneousPoly& f);

  const HomogeneousPoly& f() const { return f_; }
  int n() const { return n_; }
  int d() const { return d_; }
  int k_max() const { return k_max_; }

  const GradedBasis& basis(int j, int k) const;

  /// Columns of df^ : Omega^j_{k-d} -> Omega^{j+1}_k.
  const std::vector<ZVec>& wedge_columns(int j, int k) const;
  /// Columns of the exterior derivative Omega^j_k -> Omega^{j+1}_k.
  const std::vector<ZVec>& derivative_columns(int j, int k) const;
  /// Columns of multiplication by y = sum c_i x_i on Omega^n_k -> Omega^n_{k+1}.
  std::vector<ZVec> multiply_columns(const std::vector<std::int64_t>& y, int k) const;

  /// Image of one form under df^, with the form given in Omega^j_{k-d} coordinates.
  ZVec wedge_apply(int j, int k, const ZVec& form) const;
  ZVec derivative_apply(int j, int k, const ZVec& form) const;

 private:
  HomogeneousPoly f_;
  std::vector<std::vector<std::pair<Exponent, mpz_class>>> partials_;
  int n_, d_, k_max_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<GradedBasis>> bases_;
  mutable std::map<std::pair<int, int>, std::vector<ZVec>> wedge_;
  mutable std::map<std::pair<int, int>, std::vector<ZVec>> deriv_;
};

/// Rational matrix of df^ : Omega^j_{k-d} -> Omega^{j+1}_k.
SparseMatrix build_wedge(const HomogeneousPoly& f, int j, int k);

template <class A>
SparseVec<typename A::Elem> to_arith(const A& ar, const ZVec& v) {
  SparseVec<typename A::Elem> out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) {
    auto y = ar.from_mpz(x);
    if (!ar.is_zero(y)) out.emplace_back(i, std::move(y));
  }
  return out;
}

/// Cohomology dimensions over the arithmetic A. Ranks and echelons are
/// cached per degree.
template <class A>
class Cohomology {
 public:
  using E = typename A::Elem;
  using Vec = SparseVec<E>;

  Cohomology(const KoszulWindow& win, A ar) : win_(win), ar_(std::move(ar)) {}

  const KoszulWindow& window() const { return win_; }
  const A& arith() const { return ar_; }

  /// Rank of df^ : Omega^j_{k-d} -> Omega^{j+1}_k (0 outside 0 <= j < n).
  std::size_t wedge_rank(int j, int k);

  long mu(int k);
  long nu(int k);
  /// dim H^{-2}(^sK)_k.
  long h_minus2(int k);

  /// Image J_k of df^ in Omega^n_k, tagged by source index in Omega^{n-1}_{k-d}.
  const Echelon<A>& jacobian(int k);
  /// J_k for normal forms only: the tagged echelon if built, else an untagged one.
  const Echelon<A>& ideal(int k);
  /// Basis of the cycles Z_k = ker(df^) in Omega^{n-1}_{k-d}.
  const std::vector<Vec>& cycles(int k);
  /// Boundaries B_k = df^ Omega^{n-2}_{k-2d} inside Omega^{n-1}_{k-d}.
  const Echelon<A>& boundaries(int k);

  Vec convert(const ZVec& v) const { return to_arith(ar_, v); }

 private:
  void build_jacobian(int k);

  const KoszulWindow& win_;
  A ar_;
  std::map<std::pair<int, int>, std::size_t> ranks_;
  std::map<int, std::unique_ptr<Echelon<A>>> jac_;
  std::map<int, std::unique_ptr<Echelon<A>>> plain_;
  std::map<int, std::vector<Vec>> cyc_;
  std::map<int, std::unique_ptr<Echelon<A>>> bnd_;
};

extern template class Cohomology<IntegerArith>;
extern template class Cohomology<ModArith>;

/// Coefficients of t^n (1 + t + ... + t^{d-2})^n for k = 0..k_max.
std::vector<long> gamma_series(int n, int d, int k_max);

struct AssumptionReport {
  bool pass = true;
  int first_bad_degree = -1;
  std::string reason;
  std::vector<long> h_minus2;  // indexed by k
  bool stabilized = false;
  std::string note = "necessary-condition evidence only";
};

template <class A>
AssumptionReport assumption_evidence(Cohomology<A>& coh);

}  // namespace kspec
