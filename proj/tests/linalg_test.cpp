#include "crossint/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace crossint {
namespace {

Space gf(int p, int k, std::size_t n) { return Space{Field(p, k), n}; }

oracle::PointSet points_of(const Subspace& s) {
  return oracle::span(s.space().field, s.space().n, s.basis());
}

TEST(Rref, Examples) {
  const Space s2 = gf(2, 1, 2);
  const auto full = rref(s2, {{1, 1}, {0, 1}});
  EXPECT_EQ(full.basis(), (std::vector<Vec>{{1, 0}, {0, 1}}));
  EXPECT_EQ(full.dim(), 2u);

  const auto line = rref(gf(3, 1, 2), {{2, 2}});
  EXPECT_EQ(line.basis(), (std::vector<Vec>{{1, 1}}));

  const auto zero = rref(s2, {});
  EXPECT_EQ(zero.dim(), 0u);
  EXPECT_TRUE(zero.basis().empty());
}

TEST(Rref, RejectsMixedSpaces) {
  EXPECT_THROW(rref(gf(2, 1, 2), {{1, 0}, {1, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(rref(gf(2, 1, 2), {{2, 0}}), std::invalid_argument);
  const auto a = Subspace::whole(gf(2, 1, 2));
  const auto b = Subspace::whole(gf(3, 1, 2));
  EXPECT_THROW(subspace_sum(a, b), std::invalid_argument);
  EXPECT_THROW(subspace_intersection(a, b), std::invalid_argument);
  EXPECT_THROW(contains(a, {1, 0, 0}), std::invalid_argument);
}

TEST(Rref, IdempotentAndCanonical) {
  std::mt19937 rng(7);
  const Space s = gf(3, 1, 4);
  std::uniform_int_distribution<Element> coord(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec> rows(1 + trial % 4, Vec(4));
    for (auto& r : rows)
      for (auto& c : r) c = coord(rng);
    const auto a = rref(s, rows);
    EXPECT_EQ(rref(s, a.basis()), a);
    // A different generating set of the same span gives the same basis.
    std::vector<Vec> mixed = rows;
    for (std::size_t i = 1; i < mixed.size(); ++i) mixed[i] = add(s.field, mixed[i], scale(s.field, 2, mixed[0]));
    std::reverse(mixed.begin(), mixed.end());
    EXPECT_EQ(rref(s, mixed), a);
    EXPECT_EQ(points_of(a), oracle::span(s.field, 4, rows));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      EXPECT_EQ(a.basis()[i][a.pivots()[i]], 1u);
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (j != i) {
          EXPECT_EQ(a.basis()[j][a.pivots()[i]], 0u);
        }
      if (i > 0) {
        EXPECT_LT(a.pivots()[i - 1], a.pivots()[i]);
      }
    }
  }
}

TEST(SubspaceSum, Examples) {
  const Space s = gf(2, 1, 2);
  const auto x = rref(s, {{1, 0}});
  const auto y = rref(s, {{0, 1}});
  EXPECT_EQ(subspace_sum(x, y), Subspace::whole(s));
  EXPECT_EQ(subspace_sum(x, Subspace::zero(s)), x);
}

TEST(SubspaceIntersection, Examples) {
  const Space s3 = gf(2, 1, 3);
  const auto hs = enumerate_hyperplanes(s3);
  EXPECT_EQ(subspace_intersection(hs[0].kernel, hs[1].kernel).dim(), 1u);
  const auto u = rref(s3, {{1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(subspace_intersection(u, u), u);
  const Space s = gf(3, 1, 2);
  EXPECT_EQ(subspace_intersection(rref(s, {{1, 0}}), rref(s, {{0, 1}})).dim(), 0u);
}

TEST(SubspaceIntersection, DistinctHyperplanesMeetInCodimensionTwo) {
  for (auto [p, k, n] : {std::tuple{2, 1, 3}, {3, 1, 3}, {2, 2, 3}, {2, 1, 4}}) {
    const Space s = gf(p, k, n);
    const auto hs = enumerate_hyperplanes(s);
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = i + 1; j < hs.size(); ++j)
        EXPECT_EQ(subspace_intersection(hs[i].kernel, hs[j].kernel).dim(), n - 2);
  }
}

// Sum and intersection against point-set oracles on every pair of subspaces.
void check_all_pairs(const Space& s) {
  const auto subs = enumerate_subspaces(s);
  const auto oracle_subs = oracle::all_subspaces(s.field, s.n);
  ASSERT_EQ(subs.size(), oracle_subs.size());
  for (const auto& u : subs)
    for (const auto& v : subs) {
      const auto sum = subspace_sum(u, v);
      const auto cap = subspace_intersection(u, v);
      EXPECT_EQ(sum.dim() + cap.dim(), u.dim() + v.dim());
      EXPECT_EQ(points_of(cap), oracle::intersect(points_of(u), points_of(v)));
      oracle::PointSet both = points_of(u);
      for (const auto& x : points_of(v)) both.insert(x);
      std::vector<Vec> gens(both.begin(), both.end());
      EXPECT_EQ(points_of(sum), oracle::span(s.field, s.n, gens));
    }
}

TEST(DimensionFormula, ExhaustiveGF2Cubed) { check_all_pairs(gf(2, 1, 3)); }
TEST(DimensionFormula, ExhaustiveGF3Squared) { check_all_pairs(gf(3, 1, 2)); }

TEST(DimensionFormula, RandomGF2Fourth) {
  const Space s = gf(2, 1, 4);
  std::mt19937 rng(11);
  std::uniform_int_distribution<Element> bit(0, 1);
  std::uniform_int_distribution<int> count(0, 4);
  auto random_rows = [&] {
    std::vector<Vec> rows(count(rng), Vec(4));
    for (auto& r : rows)
      for (auto& c : r) c = bit(rng);
    return rows;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto ru = random_rows(), rv = random_rows();
    const auto u = rref(s, ru), v = rref(s, rv);
    const auto pu = oracle::span(s.field, 4, ru), pv = oracle::span(s.field, 4, rv);
    std::vector<Vec> joint = ru;
    joint.insert(joint.end(), rv.begin(), rv.end());
    const std::size_t sum_dim = oracle::log_q(oracle::span(s.field, 4, joint).size(), 2);
    const std::size_t cap_dim = oracle::log_q(oracle::intersect(pu, pv).size(), 2);
    EXPECT_EQ(subspace_sum(u, v).dim(), sum_dim);
    EXPECT_EQ(subspace_intersection(u, v).dim(), cap_dim);
    EXPECT_EQ(sum_dim + cap_dim, oracle::log_q(pu.size(), 2) + oracle::log_q(pv.size(), 2));
  }
}

TEST(Contains, Examples) {
  const Space s = gf(2, 1, 2);
  EXPECT_TRUE(contains(rref(s, {{1, 1}}), {0, 0}));
  EXPECT_TRUE(contains(Subspace::zero(s), {0, 0}));
  EXPECT_FALSE(contains(rref(s, {{1, 0}}), {1, 1}));
}

TEST(Contains, MatchesSpanEnumeration) {
  for (auto [p, k, n] : {std::tuple{3, 1, 2}, {2, 1, 3}, {2, 2, 2}}) {
    const Space s = gf(p, k, n);
    const auto all = oracle::all_vectors(s.field, n);
    for (const auto& u : enumerate_subspaces(s)) {
      const auto members = points_of(u);
      for (const auto& v : all) EXPECT_EQ(contains(u, v), members.count(v) == 1);
    }
  }
}

TEST(Hyperplanes, Examples) {
  const auto h22 = enumerate_hyperplanes(gf(2, 1, 2));
  ASSERT_EQ(h22.size(), 3u);
  EXPECT_EQ(h22[0].normal, (Vec{0, 1}));
  EXPECT_EQ(h22[1].normal, (Vec{1, 0}));
  EXPECT_EQ(h22[2].normal, (Vec{1, 1}));

  const auto h31 = enumerate_hyperplanes(gf(3, 1, 1));
  ASSERT_EQ(h31.size(), 1u);
  EXPECT_EQ(h31[0].kernel.dim(), 0u);

  EXPECT_EQ(enumerate_hyperplanes(gf(2, 1, 3)).size(), 7u);
  EXPECT_THROW(enumerate_hyperplanes(gf(2, 1, 0)), std::invalid_argument);
}

TEST(Hyperplanes, MatchesBruteForceNormalClasses) {
  // Nonzero normals modulo scalars, counted by collecting kernels as point sets.
  for (auto [p, k, n] : {std::tuple{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {3, 1, 3}}) {
    const Space s = gf(p, k, n);
    std::set<oracle::PointSet> kernels;
    const auto all = oracle::all_vectors(s.field, n);
    for (const auto& normal : all) {
      if (is_zero(normal)) continue;
      oracle::PointSet ker;
      for (const auto& x : all)
        if (dot(s.field, normal, x) == 0) ker.insert(x);
      kernels.insert(ker);
    }
    const auto hs = enumerate_hyperplanes(s);
    ASSERT_EQ(hs.size(), kernels.size());
    std::set<oracle::PointSet> ours;
    for (const auto& h : hs) ours.insert(points_of(h.kernel));
    EXPECT_EQ(ours, kernels);
  }
}

TEST(Hyperplanes, CountsAndCanonicalNormals) {
  for (int q : {2, 3, 4}) {
    const Field f = q == 4 ? Field(2, 2) : Field(q, 1);
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto hs = enumerate_hyperplanes(Space{f, n});
      std::uint64_t qn = 1;
      for (std::size_t i = 0; i < n; ++i) qn *= static_cast<std::uint64_t>(q);
      EXPECT_EQ(hs.size(), (qn - 1) / (q - 1)) << "q=" << q << " n=" << n;
      for (std::size_t i = 0; i < hs.size(); ++i) {
        EXPECT_EQ(hs[i].kernel.dim(), n - 1);
        const auto lead = std::find_if(hs[i].normal.begin(), hs[i].normal.end(), [](Element c) { return c != 0; });
        EXPECT_EQ(*lead, 1u);
        if (i > 0) {
          EXPECT_LT(hs[i - 1].normal, hs[i].normal);
        }
      }
    }
  }
}

TEST(SolveInSpan, FindsCoefficients) {
  const Space s = gf(3, 1, 3);
  const std::vector<Vec> rows{{1, 2, 0}, {0, 1, 1}};
  const auto c = solve_in_span(s, rows, {2, 0, 2});
  ASSERT_TRUE(c.has_value());
  Vec v = s.zero();
  for (std::size_t i = 0; i < rows.size(); ++i) v = add(s.field, v, scale(s.field, (*c)[i], rows[i]));
  EXPECT_EQ(v, (Vec{2, 0, 2}));
  EXPECT_FALSE(solve_in_span(s, rows, {0, 0, 1}).has_value());
}

}  // namespace
}  // namespace crossint
