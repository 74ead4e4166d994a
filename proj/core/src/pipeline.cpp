#include "kspec/pipeline.hpp"

#include <chrono>

namespace kspec {

const char* to_string(ArithMode m) {
  switch (m) {
    case ArithMode::Exact: return "exact";
    case ArithMode::Modular: return "modular";
    case ArithMode::Auto: return "auto";
  }
  return "?";
}

std::optional<ArithMode> parse_arith_mode(const std::string& s) {
  if (s == "exact") return ArithMode::Exact;
  if (s == "modular" || s == "mod") return ArithMode::Modular;
  if (s == "auto") return ArithMode::Auto;
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class A>
PipelineResult run_with(const KoszulWindow& win, A ar, const PipelineOptions& opt) {
  PipelineResult res;
  res.f = win.f();
  res.k_max = win.k_max();
  Cohomology<A> coh(win, std::move(ar));

  auto t0 = Clock::now();
  res.assumption = assumption_evidence(coh);
  res.timings.koszul = seconds_since(t0);
  if (!res.assumption.pass) {
    bool h2_clean = true;
    for (long h : res.assumption.h_minus2) h2_clean = h2_clean && h == 0;
    if (h2_clean) throw NotStabilized(res.assumption.reason);
    throw AssumptionFailure(res.assumption.reason);
  }

  t0 = Clock::now();
  res.table = compute_table(coh, opt.seed, opt.max_redraws);
  res.corollaries = verify_corollaries(res.table);
  res.timings.decomp = seconds_since(t0);

  if (opt.spectral) {
    t0 = Clock::now();
    res.spectral = spectral_sequence(coh);
    res.timings.polespec = seconds_since(t0);
  }
  return res;
}

bool same_numbers(const PipelineResult& a, const PipelineResult& b) {
  const auto& x = a.table;
  const auto& y = b.table;
  if (x.mu != y.mu || x.nu != y.nu || x.mu_free != y.mu_free || x.tau != y.tau) return false;
  if (a.spectral.has_value() != b.spectral.has_value()) return false;
  if (a.spectral) {
    if (a.spectral->rank != b.spectral->rank) return false;
    if (!(a.spectral->spectrum == b.spectral->spectrum)) return false;
  }
  return true;
}

}  // namespace

PipelineResult run_pipeline(const HomogeneousPoly& f, const PipelineOptions& opt) {
  const KoszulWindow win = opt.k_max ? KoszulWindow(f, *opt.k_max) : KoszulWindow(f);

  if (opt.arith == ArithMode::Exact) {
    PipelineResult r = run_with(win, IntegerArith{}, opt);
    r.arith = "exact";
    return r;
  }

  const std::uint32_t p1 = random_prime(opt.seed);
  if (opt.arith == ArithMode::Modular) {
    PipelineResult r = run_with(win, ModArith(p1), opt);
    r.arith = "mod " + std::to_string(p1);
    r.primes = {p1};
    return r;
  }

  std::uint32_t p2 = random_prime(opt.seed ^ 0x5bd1e9955bd1e995ULL);
  if (p2 == p1) p2 = random_prime(opt.seed + 1);
  try {
    PipelineResult a = run_with(win, ModArith(p1), opt);
    PipelineResult b = run_with(win, ModArith(p2), opt);
    if (same_numbers(a, b) && a.corollaries.pass) {
      a.arith = "mod " + std::to_string(p1) + "," + std::to_string(p2);
      a.primes = {p1, p2};
      a.timings.koszul += b.timings.koszul;
      a.timings.decomp += b.timings.decomp;
      a.timings.polespec += b.timings.polespec;
      return a;
    }
  } catch (const GenericityFailure&) {
  } catch (const LiftFailure&) {
  } catch (const std::logic_error&) {
  }
  PipelineResult r = run_with(win, IntegerArith{}, opt);
  r.arith = "exact";
  r.primes = {p1, p2};
  r.exact_fallback = true;
  return r;
}

}  // namespace kspec
