#pragma once

// One-call driver: window, assumption evidence, invariant table, identity
// checks and the pole order spectral sequence, over a chosen arithmetic.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kspec/decomp.hpp"
#include "kspec/koszul.hpp"
#include "kspec/polespec.hpp"

namespace kspec {

/// Auto: two word-size primes; exact elimination when they disagree or an
/// identity check fails.
enum class ArithMode { Exact, Modular, Auto };
const char* to_string(ArithMode m);
std::optional<ArithMode> parse_arith_mode(const std::string& s);

struct PipelineOptions {
  std::optional<int> k_max;  // default n*d + d
  std::uint64_t seed = 0;
  ArithMode arith = ArithMode::Auto;
  int max_redraws = 3;
  bool spectral = true;
};

struct Timings {
  double koszul = 0, decomp = 0, polespec = 0;
};

struct PipelineResult {
  HomogeneousPoly f;
  int k_max = 0;
  AssumptionReport assumption;
  InvariantTable table;
  CorollaryReport corollaries;
  std::optional<SpectralResult> spectral;
  std::string arith;  // "exact" or "mod <p>[,<p>]"
  std::vector<std::uint32_t> primes;
  bool exact_fallback = false;
  Timings timings;
};

/// Throws AssumptionFailure if H^-2 is nonzero in the window, NotStabilized
/// if mu has not settled at the top, GenericityFailure from the splitting.
/// Identity violations are reported in `corollaries`, not thrown.
PipelineResult run_pipeline(const HomogeneousPoly& f, const PipelineOptions& opt = {});

}  // namespace kspec
