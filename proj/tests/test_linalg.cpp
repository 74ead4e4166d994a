#include <gtest/gtest.h>

#include <random>

#include "kspec/linalg.hpp"
#include "oracles.hpp"

using namespace kspec;

namespace {

SparseMatrix to_sparse(const oracle::QMat& m, std::size_t cols) {
  SparseMatrix a(static_cast<std::uint32_t>(m.size()), static_cast<std::uint32_t>(cols));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] != 0) a.set(i, j, m[i][j]);
  return a;
}

QVec sparse(const std::vector<mpq_class>& v) {
  QVec out;
  for (std::uint32_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

struct Case {
  oracle::QMat m;
  std::size_t rows, cols, rank;
};

std::vector<Case> random_cases(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Case> out;
  for (int t = 0; t < count; ++t) {
    const std::size_t rows = 1 + rng() % 14, cols = 1 + rng() % 14;
    const std::size_t r = rng() % (std::min(rows, cols) + 1);
    const double density = 0.2 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    out.push_back({oracle::random_matrix(rng, rows, cols, r, 1 + static_cast<int>(rng() % 50), density), rows, cols, r});
  }
  return out;
}

}  // namespace

TEST(Rank, AgreesWithDenseEliminationOnRandomMatrices) {
  for (const auto& c : random_cases(1, 100)) {
    const auto a = to_sparse(c.m, c.cols);
    const auto want = oracle::rank_q(c.m);
    EXPECT_LE(want, c.rank);
    EXPECT_EQ(rank(a), want);
    EXPECT_EQ(rank(a.transpose()), want);
  }
}

TEST(Rank, ModularAgreesWithExactOnRandomMatrices) {
  int agree = 0;
  for (const auto& c : random_cases(2, 100)) {
    const auto a = to_sparse(c.m, c.cols);
    const auto p = random_prime(c.rows * 131 + c.cols);
    EXPECT_EQ(rank_mod(a, p), oracle::rank_p(c.m, p));
    agree += rank_mod(a, p) == rank(a);
    const auto mm = rank_multimodular(a, 9);
    EXPECT_EQ(mm.rank, rank(a));
  }
  EXPECT_EQ(agree, 100);
}

TEST(Rank, ModularRankDropsWhenPrimeDividesMinor) {
  const std::uint32_t p = random_prime(3);
  SparseMatrix a(2, 2);
  a.set(0, 0, 1);
  a.set(0, 1, 1);
  a.set(1, 0, 1);
  a.set(1, 1, mpq_class(mpz_class(p) + 1));
  EXPECT_EQ(rank(a), 2u);
  EXPECT_EQ(rank_mod(a, p), 1u);
  const auto mm = rank_multimodular(a, 3, 2);
  EXPECT_EQ(mm.rank, 2u);
}

TEST(Rank, RationalEntries) {
  const auto a = SparseMatrix::from_dense({{mpq_class(1, 2), mpq_class(1, 3)}, {mpq_class(3, 2), 1}});
  EXPECT_EQ(rank(a), 1u);
  EXPECT_EQ(a.get(1, 0), mpq_class(3, 2));
}

TEST(Kernel, BasisIsAnnihilatedAndHasRightDimension) {
  for (const auto& c : random_cases(3, 40)) {
    const auto a = to_sparse(c.m, c.cols);
    const auto ker = kernel(a);
    const auto r = oracle::rank_q(c.m);
    EXPECT_EQ(ker.dim(), c.cols - r);
    for (const auto& v : ker.basis()) EXPECT_TRUE(a.apply(to_rational(v)).empty());
    // independent kernel from the dense oracle spans the same space
    for (const auto& v : oracle::nullspace_q(c.m, c.cols)) EXPECT_TRUE(ker.contains(sparse(v)));
  }
}

TEST(Image, ContainsColumnsAndHasRankDimension) {
  for (const auto& c : random_cases(4, 40)) {
    const auto a = to_sparse(c.m, c.cols);
    const auto im = image(a);
    EXPECT_EQ(im.dim(), oracle::rank_q(c.m));
    for (std::uint32_t j = 0; j < a.cols(); ++j) EXPECT_TRUE(im.contains(a.column(j)));
  }
}

TEST(Solve, FindsPreimagesAndRejectsOutsiders) {
  std::mt19937_64 rng(5);
  for (const auto& c : random_cases(5, 40)) {
    const auto a = to_sparse(c.m, c.cols);
    std::vector<mpq_class> x(c.cols);
    for (auto& v : x) v = mpq_class(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
    for (auto& v : x) v.canonicalize();
    const QVec b = a.apply(sparse(x));
    const auto sol = solve_into(a, b, Subspace(a.rows()));
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a.apply(*sol), b);

    if (oracle::rank_q(c.m) < c.rows) {
      // some unit vector lies outside the image
      bool found_outside = false;
      const auto im = image(a);
      for (std::uint32_t i = 0; i < a.rows() && !found_outside; ++i) {
        const QVec e{{i, mpq_class(1)}};
        if (im.contains(e)) continue;
        found_outside = true;
        EXPECT_FALSE(solve_into(a, e, Subspace(a.rows())).has_value());
        // ... but it is solvable modulo the line it spans
        const auto sol2 = solve_into(a, e, Subspace::span(a.rows(), {e}));
        EXPECT_TRUE(sol2.has_value());
      }
      EXPECT_TRUE(found_outside);
    }
  }
}

TEST(Subspace, SumDimensionMatchesStackedRank) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3 + rng() % 8;
    const auto u = oracle::random_matrix(rng, 1 + rng() % 5, n, 1 + rng() % 3, 5, 0.7);
    const auto v = oracle::random_matrix(rng, 1 + rng() % 5, n, 1 + rng() % 3, 5, 0.7);
    std::vector<QVec> us, vs;
    for (const auto& r : u) us.push_back(sparse(r));
    for (const auto& r : v) vs.push_back(sparse(r));
    oracle::QMat stacked = u;
    stacked.insert(stacked.end(), v.begin(), v.end());
    const auto su = Subspace::span(n, us), sv = Subspace::span(n, vs);
    EXPECT_EQ(su.dim(), oracle::rank_q(u));
    EXPECT_EQ(su.sum(sv).dim(), oracle::rank_q(stacked));
    EXPECT_EQ(quotient_dim(n, su), n - su.dim());
    EXPECT_EQ(su.sum(sv), sv.sum(su));
  }
  EXPECT_EQ(Subspace::full(4).dim(), 4u);
}

template <class A>
SparseVec<typename A::Elem> to_arith_vec(const A& ar, const ZVec& z) {
  SparseVec<typename A::Elem> out;
  for (const auto& [i, x] : z)
    if (auto y = ar.from_mpz(x); !ar.is_zero(y)) out.emplace_back(i, y);
  return out;
}

template <class A>
void check_tags(A ar) {
  std::mt19937_64 rng(8);
  const auto m = oracle::random_matrix(rng, 12, 9, 6, 7, 0.6);
  std::vector<SparseVec<typename A::Elem>> inserted;
  Echelon<A> e(ar, 9);
  std::size_t grew = 0;
  for (std::uint32_t i = 0; i < m.size(); ++i) {
    ZVec z = primitive_integer(sparse(m[i]));
    auto v = to_arith_vec(ar, z);
    inserted.push_back(v);
    SparseVec<typename A::Elem> rel;
    if (e.insert(v, {{i, ar.from_int(1)}}, &rel)) {
      ++grew;
    } else {
      // relation: sum rel_j * inserted_j = 0
      SparseVec<typename A::Elem> acc;
      for (const auto& [j, c] : rel) acc = combine(ar, ar.from_int(1), acc, c, inserted[j]);
      EXPECT_TRUE(acc.empty());
      EXPECT_FALSE(rel.empty());
    }
  }
  EXPECT_EQ(grew, oracle::rank_q(m));
  for (const auto& row : e.rows()) {
    SparseVec<typename A::Elem> acc;
    for (const auto& [j, c] : row.tag) acc = combine(ar, ar.from_int(1), acc, c, inserted[j]);
    EXPECT_EQ(acc, row.v);
  }
  for (const auto& v : inserted) EXPECT_TRUE(e.contains(v));
}

TEST(Echelon, TagsRecordCombinationsExact) { check_tags(IntegerArith{}); }
TEST(Echelon, TagsRecordCombinationsModular) { check_tags(ModArith(random_prime(1))); }

TEST(Echelon, CanonicalBasisIsReducedAndSpansRowSpace) {
  std::mt19937_64 rng(10);
  const auto m = oracle::random_matrix(rng, 8, 10, 5, 9, 0.8);
  Echelon<IntegerArith> e(IntegerArith{}, 10);
  for (const auto& r : m) e.insert(primitive_integer(sparse(r)));
  const auto basis = e.canonical_basis();
  ASSERT_EQ(basis.size(), oracle::rank_q(m));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    EXPECT_GT(basis[i].front().second, 0);
    mpz_class g = 0;
    for (const auto& [_, x] : basis[i]) g = gcd(g, x);
    EXPECT_EQ(g, 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j == i) continue;
      EXPECT_EQ(entry(IntegerArith{}, basis[j], basis[i].front().first), 0);
    }
  }
  for (const auto& r : m) EXPECT_TRUE(e.contains(primitive_integer(sparse(r))));
}

TEST(Primes, RandomPrimeIsDeterministicPrimeInRange) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto p = random_prime(s);
    EXPECT_EQ(p, random_prime(s));
    EXPECT_GT(p, 1u << 30);
    EXPECT_LT(p, 1u << 31);
    EXPECT_TRUE(is_prime_u32(p));
    for (std::uint32_t q = 2; q * q <= p && q < 50000; ++q) ASSERT_NE(p % q, 0u);
  }
  EXPECT_FALSE(is_prime_u32(1));
  EXPECT_TRUE(is_prime_u32(2));
  EXPECT_FALSE(is_prime_u32(2147483645u));  // 5 * 429496729
  EXPECT_TRUE(is_prime_u32(2147483647u));
}

TEST(Matrix, TransposeMultiplyApply) {
  const auto a = SparseMatrix::from_dense({{1, 2, 0}, {0, 1, 3}});
  const auto b = SparseMatrix::from_dense({{1, 0}, {0, 1}, {1, 1}});
  const auto ab = a.multiply(b);
  EXPECT_EQ(ab.get(0, 0), 1);
  EXPECT_EQ(ab.get(0, 1), 2);
  EXPECT_EQ(ab.get(1, 0), 3);
  EXPECT_EQ(ab.get(1, 1), 4);
  EXPECT_EQ(a.transpose().get(2, 1), 3);
  EXPECT_EQ(a.apply({{0, 1}, {2, 1}}), (QVec{{0, 1}, {1, 3}}));
  EXPECT_EQ(a.nnz(), 4u);
}

TEST(Primitive, ClearsDenominators) {
  const QVec v{{0, mpq_class(1, 2)}, {3, mpq_class(-3, 4)}};
  EXPECT_EQ(primitive_integer(v), (ZVec{{0, 2}, {3, -3}}));
}
