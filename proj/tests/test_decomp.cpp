#include <gtest/gtest.h>

#include "kspec/closedform.hpp"
#include "kspec/corpus.hpp"
#include "kspec/decomp.hpp"
#include "kspec/pipeline.hpp"
#include "worked_tables.hpp"

using namespace kspec;

namespace {

HomogeneousPoly P(const std::string& text, const std::string& vars) { return parse_poly(text, split_vars(vars)); }

InvariantTable table_of(const HomogeneousPoly& f, std::uint64_t seed = 0, std::optional<int> k_max = {}) {
  KoszulWindow w = k_max ? KoszulWindow(f, *k_max) : KoszulWindow(f);
  Cohomology<IntegerArith> coh(w, IntegerArith{});
  return compute_table(coh, seed);
}

// Table built from reference rows, padded with the stable values.
InvariantTable from_rows(const tables::Worked& t, int n, int d) {
  InvariantTable tab;
  tab.n = n;
  tab.d = d;
  tab.k_max = static_cast<int>(t.mu.size());
  auto pad = [](const std::vector<long>& row) {
    std::vector<long> out{0};
    out.insert(out.end(), row.begin(), row.end());
    return out;
  };
  tab.gamma = pad(t.gamma);
  tab.mu_torsion = pad(t.mu_t);
  tab.mu_free = pad(t.mu_f);
  tab.mu = pad(t.mu);
  tab.nu = pad(t.nu);
  tab.tau = tab.mu.back();
  return tab;
}

}  // namespace

TEST(Decomp, WorkedTablesSplitExactly) {
  for (const auto& t : tables::worked()) {
    const auto tab = table_of(P(t.poly, t.vars));
    for (std::size_t i = 0; i < t.mu.size(); ++i) {
      const int k = static_cast<int>(i) + 1;
      EXPECT_EQ(tab.gamma[k], t.gamma[i]) << t.name << " k=" << k;
      EXPECT_EQ(tab.mu_torsion[k], t.mu_t[i]) << t.name << " k=" << k;
      EXPECT_EQ(tab.mu_free[k], t.mu_f[i]) << t.name << " k=" << k;
    }
  }
}

TEST(Decomp, TauIsStableMu) {
  EXPECT_EQ(table_of(P("x*y*z", "x,y,z")).tau, 3);
  EXPECT_EQ(table_of(P("x^2*y^2 + z^4", "x,y,z")).tau, 6);
  EXPECT_EQ(table_of(P("x^3 + y^3 + z^3", "x,y,z")).tau, 0);
}

TEST(Corollaries, HoldOnReferenceTables) {
  const int n[] = {3, 3, 3, 3, 2};
  const int d[] = {3, 4, 4, 4, 4};
  int i = 0;
  for (const auto& t : tables::worked()) {
    const auto tab = from_rows(t, n[i], d[i]);
    ++i;
    const auto rep = verify_corollaries(tab);
    EXPECT_TRUE(rep.pass) << t.name << ": " << (rep.violations.empty() ? "" : rep.violations[0].id);
    EXPECT_TRUE(rep.balance_nonnegative) << t.name;
  }
}

TEST(Corollaries, CorruptedEntryIsReported) {
  auto tab = table_of(P("x^2*y^2 + x^2*z^2 + y^2*z^2", "x,y,z"));
  ASSERT_TRUE(verify_corollaries(tab).pass);
  tab.mu_torsion[5] += 1;
  tab.mu_free[5] -= 1;
  const auto rep = verify_corollaries(tab);
  EXPECT_FALSE(rep.pass);
  bool symmetry = false;
  for (const auto& v : rep.violations) symmetry = symmetry || v.id == "mu'-symmetry";
  EXPECT_TRUE(symmetry);
  EXPECT_THROW(require(rep), IdentityViolation);
}

TEST(Corollaries, HoldOnBuiltinCorpus) {
  for (const auto& e : builtin_corpus()) {
    const auto res = run_pipeline(P(e.poly, e.vars), {.k_max = {}, .spectral = false});
    EXPECT_TRUE(res.corollaries.pass) << e.name;
    EXPECT_GT(res.corollaries.checks, 0);
  }
}

TEST(Decomp, SmoothTablesReduceToGamma) {
  const auto tab = table_of(P("x^4 + y^4 + z^4", "x,y,z"));
  EXPECT_EQ(tab.tau, 0);
  EXPECT_EQ(tab.mu, tab.gamma);
  EXPECT_EQ(tab.mu, tab.mu_torsion);
  for (long v : tab.nu) EXPECT_EQ(v, 0);
  EXPECT_TRUE(verify_corollaries(tab).pass);
}

TEST(Decomp, FreePartIndependentOfSeed) {
  for (const char* text : {"x^2*y*z + x*y^2*z + x*y*z^2", "x^2*y^2 + z^4", "y^2*z - x^3"}) {
    const auto f = P(text, "x,y,z");
    const auto a = table_of(f, 1), b = table_of(f, 987654321);
    EXPECT_NE(a.y, b.y);
    EXPECT_EQ(a.mu_free, b.mu_free) << text;
    EXPECT_EQ(a.mu_torsion, b.mu_torsion) << text;
  }
}

TEST(Decomp, NonGenericLinearFormIsRejected) {
  // y = x vanishes at the singular point [0:1] of x^2 y^2, so
  // multiplication by it loses the free part supported there.
  const auto f = P("x^2*y^2", "x,y");
  KoszulWindow w(f);
  Cohomology<IntegerArith> coh(w, IntegerArith{});
  InvariantTable tab;
  tab.n = 2;
  tab.d = 4;
  tab.k_max = w.k_max();
  tab.gamma = gamma_series(2, 4, tab.k_max);
  for (int k = 0; k <= tab.k_max; ++k) {
    tab.mu.push_back(coh.mu(k));
    tab.nu.push_back(coh.nu(k));
  }
  tab.tau = 2;
  tab.y = {1, 0};
  for (int k = 0; k <= tab.k_max; ++k) {
    tab.mu_free.push_back(mu_free(coh, tab.y, k));
    tab.mu_torsion.push_back(tab.mu[k] - tab.mu_free[k]);
  }
  EXPECT_FALSE(genericity_ok(tab));
  EXPECT_TRUE(genericity_ok(compute_table(coh, 0)));
}

TEST(Decomp, StabilizationOffsetStaysInWindow) {
  for (int k = 0; k <= 16; ++k) {
    const int p = stabilization_offset(3, 4, k, 16);
    EXPECT_GE(p, 0);
    EXPECT_LE(k + p, 16);
  }
  EXPECT_EQ(stabilization_offset(3, 4, 2, 16), 10);
}

TEST(Decomp, RedrawSeedsDiffer) {
  EXPECT_EQ(redraw_seed(5, 0), 5u);
  EXPECT_NE(redraw_seed(5, 1), redraw_seed(5, 0));
  EXPECT_NE(redraw_seed(5, 1), redraw_seed(5, 2));
}

TEST(Type, ClassificationExamples) {
  EXPECT_EQ(table_of(P("x*y*z", "x,y,z")).type, SingularityType::I);
  EXPECT_EQ(table_of(P("x^4 + y^4", "x,y,z")).type, SingularityType::II);
  EXPECT_EQ(table_of(P("x^3 + y^3 + z^3", "x,y,z")).type, SingularityType::I);
  // first nonzero nu of xyz sits at 6 > nd/2
  const auto t = table_of(P("x*y*z", "x,y,z"));
  EXPECT_EQ(t.nu[5], 0);
  EXPECT_EQ(t.nu[6], 2);
}

TEST(LowDegreeFree, SpanOfSingularPoints) {
  const auto xyz = table_of(P("x*y*z", "x,y,z"));
  auto r = check_lemma21(xyz, 3);
  EXPECT_TRUE(r.pass) << r.detail;
  EXPECT_EQ(xyz.mu_free[3], 1);
  EXPECT_EQ(xyz.mu_free[4], 3);
  EXPECT_FALSE(check_lemma21(xyz, 4).pass);
  const auto six = table_of(P("x^2*y*z + x*y^2*z + x*y*z^2", "x,y,z"));
  EXPECT_TRUE(check_lemma21(six, 3).pass);
  EXPECT_EQ(six.mu_free[4], 3);
  // independent nodes: mu'' = 0, 1, tau for k < n, = n, > n
  const auto cay = table_of(P("x*y*z + x*y*w + x*z*w + y*z*w", "x,y,z,w"));
  for (int k = 0; k <= cay.k_max; ++k) EXPECT_EQ(cay.mu_free[k], k < 4 ? 0 : k == 4 ? 1 : 4) << k;
}

TEST(Nodal, VanishingRangeOnNodalCorpus) {
  for (const auto& e : builtin_corpus()) {
    if (!e.has("nodal")) continue;
    const auto tab = table_of(P(e.poly, e.vars));
    const auto r = check_nodal_vanishing(tab);
    EXPECT_TRUE(r.pass) << e.name << ": " << r.detail;
  }
}

TEST(RelationDetector, LowDegreeSyzygyForcesNu) {
  for (const auto& [text, vars] : std::vector<std::pair<std::string, std::string>>{
           {"x^3 + y^3", "x,y,z"}, {"x^4 + y^4", "x,y,z"}, {"x^2*y^2 + z^4", "x,y,z"}, {"x^3 + y^3 + z^3", "x,y,z,w"}}) {
    const auto f = P(text, vars);
    KoszulWindow w(f);
    Cohomology<IntegerArith> coh(w, IntegerArith{});
    const auto tab = compute_table(coh, 0);
    const auto degs = syzygy_degrees(coh);
    const auto r = check_relation_detector(coh, tab);
    EXPECT_TRUE(r.pass) << text << ": " << r.detail;
    if (f.partials().back().is_zero()) {
      ASSERT_FALSE(degs.empty()) << text;
      EXPECT_EQ(degs.front(), 0);
    }
  }
}

TEST(BinaryForms, EngineMatchesClampedFormulas) {
  for (const std::string spec : {"x:2,y:2", "x:3,y:1", "x:1,y:1,x+y:1", "x:2,y:1,x+y:2", "x:3,y:2,x-y:1,x+2*y:1"}) {
    const auto fac = BinaryFormFactorization::parse(spec);
    const auto tab = table_of(fac.to_poly());
    const auto want = lemma23_table(fac, tab.k_max);
    EXPECT_EQ(tab.mu, want.mu) << spec;
    EXPECT_EQ(tab.mu_torsion, want.mu_torsion) << spec;
    EXPECT_EQ(tab.mu_free, want.mu_free) << spec;
    EXPECT_EQ(tab.nu, want.nu) << spec;
    EXPECT_EQ(tab.tau, want.tau) << spec;
  }
}
