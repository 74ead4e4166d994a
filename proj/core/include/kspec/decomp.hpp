#pragma once

// Torsion/free splitting M = M' + M'' along a generic linear form y, the total
// Tjurina number and the duality identities between mu', mu'', nu, gamma.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kspec/errors.hpp"
#include "kspec/koszul.hpp"

namespace kspec {

enum class SingularityType { I, II };
const char* to_string(SingularityType t);

/// Integer sequences indexed by k = 0..k_max.
struct InvariantTable {
  int n = 0;
  int d = 0;
  int k_max = 0;
  long tau = 0;
  std::vector<long> gamma, mu, mu_torsion, mu_free, nu;
  SingularityType type = SingularityType::I;
  std::uint64_t seed = 0;  // seed of the linear form that passed
  std::vector<std::int64_t> y;
  int draws = 1;

  /// Value at k; 0 for k < 0. Throws for k > k_max.
  long at(const std::vector<long>& seq, int k) const;
  bool in_window(int k) const { return k <= k_max; }
};

/// Seed of the attempt-th linear form.
std::uint64_t redraw_seed(std::uint64_t seed, int attempt);

/// Stabilized mu at the top of the window; NotStabilized if
/// mu_{k_max-1} != mu_{k_max}.
template <class A>
long tau(Cohomology<A>& coh);

/// Offset p used for y^p : M_k -> M_{k+p}.
int stabilization_offset(int n, int d, int k, int k_max);

/// mu''_k as the rank of y^p on M_k.
template <class A>
long mu_free(Cohomology<A>& coh, const std::vector<std::int64_t>& y, int k);

/// (mu'_k, mu''_k).
template <class A>
std::pair<long, long> mu_split(Cohomology<A>& coh, const std::vector<std::int64_t>& y, int k);

/// Full table. Re-draws y (up to max_redraws times) while the mu''/nu
/// duality or the mu' formula fails; GenericityFailure afterwards.
template <class A>
InvariantTable compute_table(Cohomology<A>& coh, std::uint64_t seed, int max_redraws = 3);

struct Violation {
  std::string id;
  int k = 0;
  std::string detail;
};

struct CorollaryReport {
  bool pass = true;
  std::vector<Violation> violations;
  int checks = 0;
  // Both sides of the gamma balance for k = 0..min(nd, k_max); their
  // signs are recorded as observations.
  std::vector<long> balance_lhs, balance_rhs;
  std::vector<int> balance_negative_degrees;
  bool balance_nonnegative = true;
};

/// mu = mu' + mu'' = nu + gamma, symmetry of mu', the mu''/nu duality,
/// the mu' formula, the gamma balance, monotonicity of mu'' and nu, nu_k = 0 for
/// k <= d, and mu = nu = tau at the window top.
CorollaryReport verify_corollaries(const InvariantTable& tab);
/// Duality and mu' formula only; used to validate the choice of y.
bool genericity_ok(const InvariantTable& tab);
/// Throws IdentityViolation for the first violation.
void require(const CorollaryReport& rep);

SingularityType classify_type(const InvariantTable& tab);

struct CheckReport {
  bool pass = true;
  std::string detail;
};

/// mu''_n = 1 and mu''_{n+1} >= r_span (only meaningful when tau > 0).
CheckReport check_lemma21(const InvariantTable& tab, int r_span);

/// nu_k = 0 for k <= (n1+1)d (n even) or k <= (n1+1)d - 1 (n odd),
/// n1 = floor((n-1)/2). Valid for nodal Z only.
CheckReport check_nodal_vanishing(const InvariantTable& tab);

/// Degrees k <= d-2 carrying a syzygy among the partials, each of which
/// forces nu_{d+n+k-1} != 0.
template <class A>
std::vector<int> syzygy_degrees(Cohomology<A>& coh);
template <class A>
CheckReport check_relation_detector(Cohomology<A>& coh, const InvariantTable& tab);

}  // namespace kspec
