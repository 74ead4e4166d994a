#include <gtest/gtest.h>

#include <sstream>

#include "kspec/corpus.hpp"
#include "kspec/pipeline.hpp"
#include "kspec/polespec.hpp"
#include "oracles.hpp"
#include "worked_tables.hpp"

using namespace kspec;

namespace {

HomogeneousPoly P(const std::string& text, const std::string& vars) { return parse_poly(text, split_vars(vars)); }

PipelineResult run_exact(const HomogeneousPoly& f, std::optional<int> k_max = {}) {
  PipelineOptions opt;
  opt.k_max = k_max;
  opt.arith = ArithMode::Exact;
  return run_pipeline(f, opt);
}

Rational parse_q(const std::string& s) { return parse_rational(s); }

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::istringstream is(s);
  for (std::string tok; is >> tok;) out.push_back(parse_q(tok));
  return out;
}

}  // namespace

TEST(SpectralSequence, WorkedTablesSecondPageAndSpectrum) {
  for (const auto& t : tables::worked()) {
    const auto res = run_exact(P(t.poly, t.vars));
    ASSERT_TRUE(res.spectral);
    const auto& sr = *res.spectral;
    for (std::size_t i = 0; i < t.mu2.size(); ++i) {
      const int k = static_cast<int>(i) + 1;
      ASSERT_TRUE(sr.mu_valid(2, k)) << t.name << " k=" << k;
      EXPECT_EQ(sr.mu_at(2, k), t.mu2[i]) << t.name << " k=" << k;
      EXPECT_EQ(sr.nu_at(2, k), t.nu2[i]) << t.name << " k=" << k;
      EXPECT_EQ(sr.spectrum.at(k), t.sp[i]) << t.name << " k=" << k;
    }
    EXPECT_TRUE(sr.degenerate) << t.name;
    EXPECT_TRUE(sr.torsion.all_zero()) << t.name;
  }
}

TEST(SpectralSequence, XyzSpectrumText) {
  const auto res = run_exact(P("x*y*z", "x,y,z"));
  EXPECT_EQ(res.spectral->spectrum.to_string(), "t - 2*t^2");
  EXPECT_FALSE(res.spectral->spectrum.truncated);
}

TEST(FirstDifferential, RankMatchesDenseOracle) {
  for (const auto& [text, vars] : std::vector<std::pair<std::string, std::string>>{
           {"x^2*y^2", "x,y"},
           {"x^3*y + x*y^3", "x,y"},
           {"x*y*z", "x,y,z"},
           {"x^2*y^2 + z^4", "x,y,z"},
           {"x^3 + y^3", "x,y,z"},
           {"y^2*z - x^3", "x,y,z"},
           {"x^4*z + y^5 + x^2*y^3", "x,y,z"}}) {
    const auto f = P(text, vars);
    const int k_max = f.num_vars() * f.degree() + f.degree();
    KoszulWindow w(f, k_max);
    Cohomology<IntegerArith> coh(w, IntegerArith{});
    oracle::DenseKoszul o(f);
    for (int k = f.degree(); k <= k_max; ++k) EXPECT_EQ(d1_rank(coh, k).rank, o.d1_rank(k)) << text << " k=" << k;
  }
}

TEST(FirstDifferential, SecondPageFromOracleRanks) {
  // mu^(2)_k = mu_k - rank d1 into k, nu^(2)_k = nu_k - rank d1 out of k
  for (const auto& [text, vars] : std::vector<std::pair<std::string, std::string>>{
           {"x^2*y^2", "x,y"}, {"x*y*z", "x,y,z"}, {"x^3 + y^3", "x,y,z"}, {"x^4*z + y^5 + x^2*y^3", "x,y,z"}}) {
    const auto f = P(text, vars);
    const auto res = run_exact(f);
    const auto& sr = *res.spectral;
    oracle::DenseKoszul o(f);
    const int d = f.degree();
    for (int k = 0; k + d <= sr.k_max; ++k) {
      EXPECT_EQ(sr.mu_at(2, k), o.mu(k) - o.d1_rank(k + d)) << text << " k=" << k;
      EXPECT_EQ(sr.nu_at(2, k), o.nu(k) - (k >= d ? o.d1_rank(k) : 0)) << text << " k=" << k;
    }
  }
}

TEST(SpectralSequence, IndependentOfRepresentatives) {
  for (const char* text : {"x^4*z + y^5 + x^2*y^3", "x^2*y^2 + z^4"}) {
    const auto f = P(text, "x,y,z");
    KoszulWindow w(f);
    Cohomology<ModArith> coh(w, ModArith(random_prime(0)));
    const auto base = spectral_sequence(coh);
    for (std::uint64_t s : {1u, 2u, 3u}) {
      SpectralOptions opt;
      opt.permute_seed = s;
      const auto alt = spectral_sequence(coh, opt);
      EXPECT_EQ(alt.mu_r, base.mu_r) << text;
      EXPECT_EQ(alt.nu_r, base.nu_r) << text;
      EXPECT_EQ(alt.rank, base.rank) << text;
      EXPECT_EQ(alt.spectrum, base.spectrum) << text;
    }
  }
}

TEST(SpectralSequence, ModularAgreesWithExact) {
  for (const auto& e : builtin_corpus()) {
    if (e.vars != "x,y,z") continue;
    const auto f = P(e.poly, e.vars);
    KoszulWindow w(f);
    Cohomology<IntegerArith> cq(w, IntegerArith{});
    Cohomology<ModArith> cp(w, ModArith(random_prime(9)));
    const auto a = spectral_sequence(cq), b = spectral_sequence(cp);
    EXPECT_EQ(a.mu_r, b.mu_r) << e.name;
    EXPECT_EQ(a.nu_r, b.nu_r) << e.name;
    EXPECT_EQ(a.spectrum, b.spectrum) << e.name;
  }
}

TEST(SpectralSequence, BoundariesMapIntoJacobianImage) {
  const auto f = P("x^2*y*z + x*y^2*z + x*y*z^2", "x,y,z");
  KoszulWindow w(f);
  Cohomology<IntegerArith> coh(w, IntegerArith{});
  for (int k = f.degree(); k <= w.k_max(); ++k) EXPECT_NO_THROW(check_boundaries_closed(coh, k));
}

TEST(SpectralSequence, DifferentialsOnlyShrinkPages) {
  const auto res = run_pipeline(P("x^4*z + y^5 + x^2*y^3", "x,y,z"));
  const auto& sr = *res.spectral;
  for (int r = 1; r + 1 <= sr.max_stage + 1; ++r)
    for (int k = 0; k <= sr.k_max; ++k) {
      EXPECT_LE(sr.mu_at(r + 1, k), sr.mu_at(r, k));
      EXPECT_LE(sr.nu_at(r + 1, k), sr.nu_at(r, k));
      EXPECT_GE(sr.nu_at(r + 1, k), 0);
    }
}

TEST(Torsion, WeightedHomogeneousCorpusDegeneratesAtSecondPage) {
  for (const auto& e : builtin_corpus()) {
    if (!e.has("wh") && !e.has("smooth")) continue;
    const auto res = run_pipeline(P(e.poly, e.vars));
    const auto& sr = *res.spectral;
    EXPECT_TRUE(sr.torsion.all_zero()) << e.name;
    EXPECT_TRUE(sr.degenerate) << e.name;
    EXPECT_FALSE(sr.spectrum.truncated) << e.name;
    for (int k = 0; k <= sr.spectrum.valid_top; ++k)
      EXPECT_EQ(sr.spectrum.at(k), sr.mu_at(2, k) - sr.nu_at(2, k)) << e.name << " k=" << k;
  }
}

TEST(Torsion, NonWeightedHomogeneousHasHigherDifferentials) {
  const auto res = run_pipeline(P("x^4*z + y^5 + x^2*y^3", "x,y,z"));
  const auto& sr = *res.spectral;
  EXPECT_FALSE(sr.torsion.all_zero());
  EXPECT_FALSE(sr.degenerate);
  EXPECT_GE(sr.r_eff, 2);
  EXPECT_TRUE(sr.spectrum.truncated);
  EXPECT_LT(sr.spectrum.valid_top, sr.k_max);
}

TEST(Spectrum, SmoothFermatIsGamma) {
  for (int d = 2; d <= 5; ++d) {
    const std::string text = "x^" + std::to_string(d) + " + y^" + std::to_string(d) + " + z^" + std::to_string(d);
    const auto res = run_pipeline(P(text, "x,y,z"));
    const auto g = oracle::gamma_by_count(3, d, res.k_max);
    const auto& sp = res.spectral->spectrum;
    for (int k = 0; k <= sp.valid_top; ++k) EXPECT_EQ(sp.at(k), g[k]) << text << " k=" << k;
  }
}

TEST(Spectrum, TextAndCoefficients) {
  const auto sp = PoleSpectrum::from_coefficients(4, {0, 0, 0, 1, 0, 0, 0, 0, -2}, 8);
  EXPECT_EQ(sp.to_string(), "t^(3/4) - 2*t^2");
  ASSERT_EQ(sp.support.size(), 2u);
  EXPECT_EQ(sp.support[0].exponent, Rational(3, 4));
  EXPECT_EQ(sp.at(8), -2);
  EXPECT_EQ(sp.at(5), 0);
  EXPECT_EQ(PoleSpectrum::from_coefficients(3, {0, 0, 0}, 2).to_string(), "0");
}

TEST(ExponentBounds, HoldOnCorpusWithLocalData) {
  for (const auto& e : builtin_corpus()) {
    if (!e.alpha_min) continue;
    const auto res = run_pipeline(P(e.poly, e.vars));
    std::optional<std::vector<Rational>> ex;
    if (e.local_exponents) ex = parse_list(*e.local_exponents);
    const auto rep = check_exponent_bounds(res.table, *res.spectral, parse_q(*e.alpha_min), ex);
    EXPECT_TRUE(rep.pass) << e.name << ": " << (rep.violations.empty() ? "" : rep.violations[0].id);
    EXPECT_GT(rep.checks, 0) << e.name;
  }
}

TEST(ExponentBounds, OverstatedMinimalExponentIsCaught) {
  // nu_6 = 2 for xyz, so alpha_min = 2 would force it to vanish
  const auto res = run_pipeline(P("x*y*z", "x,y,z"));
  const auto rep = check_exponent_bounds(res.table, *res.spectral, Rational(2));
  EXPECT_FALSE(rep.pass);
  EXPECT_THROW(require(rep), BoundViolation);
  // too few local exponents at 1 for nu^(2)_6 = 2
  const auto rep2 = check_exponent_bounds(res.table, *res.spectral, Rational(1), std::vector<Rational>{1});
  EXPECT_FALSE(rep2.pass);
}

TEST(ExponentBounds, LowExponentsCountMonomials) {
  // below the minimal exponent Sp_P sees only the Hodge filtration of P^2
  for (const auto& e : builtin_corpus()) {
    if (!e.alpha_min || e.vars != "x,y,z") continue;
    const auto res = run_pipeline(P(e.poly, e.vars));
    const int d = res.f.degree();
    const Rational a = std::min(parse_q(*e.alpha_min), Rational(1));
    for (int p = 1; Rational(p) / d < a; ++p) EXPECT_EQ(res.spectral->spectrum.at(p), binomial(p - 1, 2)) << e.name << " p=" << p;
  }
}
