#include <gtest/gtest.h>

#include <set>

#include "wszeged/optimizer.hpp"
#include "wszeged/oracle.hpp"

namespace {

using wsz::Int;

// Rooted unlabeled trees: a(n+1) = (1/n) sum_{k=1..n} (sum_{d|k} d a(d)) a(n-k+1).
std::vector<Int> rooted_counts(std::size_t max) {
  std::vector<Int> a(max + 1, 0);
  a[1] = 1;
  for (std::size_t n = 1; n < max; ++n) {
    Int sum = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      Int c = 0;
      for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) c += static_cast<Int>(d) * a[d];
      sum += c * a[n - k + 1];
    }
    a[n + 1] = sum / static_cast<Int>(n);
  }
  return a;
}

// Free trees from rooted counts: t(n) = a(n) - (sum_{i+j=n} a(i) a(j) - [n even] a(n/2)) / 2.
std::vector<Int> free_counts(std::size_t max) {
  const auto a = rooted_counts(max);
  std::vector<Int> t(max + 1, 0);
  for (std::size_t n = 1; n <= max; ++n) {
    Int pairs = 0;
    for (std::size_t i = 1; i < n; ++i) pairs += a[i] * a[n - i];
    if (n % 2 == 0) pairs -= a[n / 2];
    t[n] = a[n] - pairs / 2;
  }
  return t;
}

TEST(CountingRecurrences, KnownPrefixes) {
  const auto a = rooted_counts(9);
  EXPECT_EQ(std::vector<Int>(a.begin() + 1, a.end()), (std::vector<Int>{1, 1, 2, 4, 9, 20, 48, 115, 286}));
  const auto t = free_counts(12);
  EXPECT_EQ(std::vector<Int>(t.begin() + 1, t.end()),
            (std::vector<Int>{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551}));
}

TEST(EnumerateFreeTrees, CountsDistinctTreesMatchRecurrence) {
  const auto expected = free_counts(14);
  for (std::size_t n = 1; n <= 14; ++n) {
    auto it = wsz::enumerate_free_trees(n);
    std::set<std::string> seen;
    std::size_t count = 0;
    while (auto g = it.next()) {
      ASSERT_EQ(g->vertex_count(), n);
      ASSERT_TRUE(g->is_tree());
      seen.insert(wsz::free_tree_encoding(*g));
      ++count;
    }
    EXPECT_EQ(static_cast<Int>(count), expected[n]) << n;
    EXPECT_EQ(seen.size(), count) << n;
  }
  EXPECT_THROW(wsz::enumerate_free_trees(19), wsz::LimitError);
  EXPECT_THROW(wsz::enumerate_free_trees(0), wsz::DomainError);
}

TEST(EnumerateBranchShapes, CountsDistinctShapesMatchRecurrence) {
  const auto expected = rooted_counts(11);
  for (std::size_t m = 1; m <= 11; ++m) {
    auto it = wsz::enumerate_branch_shapes(m);
    std::set<wsz::BranchShape> seen;
    std::size_t count = 0;
    while (auto s = it.next()) {
      ASSERT_EQ(s->size(), m);
      seen.insert(*s);
      ++count;
    }
    EXPECT_EQ(static_cast<Int>(count), expected[m]) << m;
    EXPECT_EQ(seen.size(), count) << m;
    EXPECT_EQ(wsz::all_branch_shapes(m).size(), count);
  }
  EXPECT_THROW(wsz::enumerate_branch_shapes(15), wsz::LimitError);
}

TEST(FreeTreeEncoding, IsomorphismInvariant) {
  const auto a = wsz::parse_edge_list("0 1\n1 2\n2 3\n1 4");
  const auto b = wsz::parse_edge_list("4 3\n3 2\n2 1\n2 0");
  const auto c = wsz::parse_edge_list("0 1\n1 2\n2 3\n3 4");
  EXPECT_EQ(wsz::free_tree_encoding(a), wsz::free_tree_encoding(b));
  EXPECT_NE(wsz::free_tree_encoding(a), wsz::free_tree_encoding(c));
  EXPECT_EQ(wsz::centroids(c), (std::vector<wsz::Vertex>{2}));
  EXPECT_EQ(wsz::centroids(wsz::parse_edge_list("0 1\n1 2\n2 3")).size(), 2u);
}

TEST(BruteForceMinTree, Examples) {
  const auto t2 = wsz::brute_force_min_tree(2);
  EXPECT_EQ(t2.cost, 2);
  const auto t4 = wsz::brute_force_min_tree(4);
  EXPECT_EQ(t4.cost, 34);
  EXPECT_EQ(t4.trees_examined, 2u);
  ASSERT_EQ(t4.minimizers.size(), 1u);
  EXPECT_EQ(t4.minimizers[0].max_degree(), 2u);
  const auto t7 = wsz::brute_force_min_tree(7);
  EXPECT_EQ(t7.trees_examined, 11u);
  ASSERT_EQ(t7.minimizers.size(), 1u);
  // spider with three legs of length 2
  const auto spider = wsz::parse_edge_list("0 1\n1 2\n0 3\n3 4\n0 5\n5 6");
  EXPECT_EQ(wsz::free_tree_encoding(t7.minimizers[0]), wsz::free_tree_encoding(spider));
}

TEST(BruteForceMinTree, MatchesDpUpToTwelve) {
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto brute = wsz::brute_force_min_tree(n);
    const auto dp = wsz::minimal_tree(static_cast<Int>(n));
    EXPECT_EQ(brute.cost, dp.cost) << n;
    std::set<std::string> expected;
    for (const auto& g : brute.minimizers) expected.insert(wsz::free_tree_encoding(g));
    std::set<std::string> got;
    for (const auto& c : dp.classes) got.insert(c.canonical);
    EXPECT_EQ(got, expected) << n;
  }
}

TEST(BruteForceMinBranch, Examples) {
  for (Int n = 4; n <= 30; ++n) {
    const auto b = wsz::brute_force_min_branch(3, n);
    EXPECT_EQ(b.cost, 17 * n - 37);
    ASSERT_EQ(b.minimizers.size(), 1u);
    EXPECT_EQ(b.minimizers[0], wsz::BranchShape::chain(3));
  }
  const auto at10 = wsz::brute_force_min_branch(4, 10);
  EXPECT_EQ(at10.cost, 215);
  EXPECT_EQ(at10.minimizers, (std::vector<wsz::BranchShape>{wsz::parse_branch("((())())")}));
  const auto at5 = wsz::brute_force_min_branch(4, 5);
  EXPECT_EQ(at5.cost, 68);
  EXPECT_EQ(at5.minimizers, (std::vector<wsz::BranchShape>{wsz::BranchShape::chain(4)}));
  EXPECT_THROW(wsz::brute_force_min_branch(4, 4), wsz::DomainError);
}

TEST(RandomTree, DeterministicAndValid) {
  EXPECT_EQ(wsz::random_tree(1, 5).vertex_count(), 1u);
  const auto e = wsz::random_tree(2, 5);
  EXPECT_EQ(e.to_graph().edge_count(), 1u);
  const auto a = wsz::random_tree(40, 123);
  const auto b = wsz::random_tree(40, 123);
  for (wsz::Vertex v = 0; v < 40; ++v) EXPECT_EQ(a.parent(v), b.parent(v));
  EXPECT_TRUE(a.to_graph().is_tree());
  EXPECT_THROW(wsz::random_tree(0, 1), wsz::DomainError);
}

TEST(MultisetOdometer, EnumeratesEachMultisetOnce) {
  // sizes {1, 2, 2}: multisets of indices summing to 4
  wsz::MultisetOdometer odo({1, 2, 2}, 4);
  std::set<std::vector<std::size_t>> seen;
  while (const auto* idx = odo.next()) EXPECT_TRUE(seen.insert(*idx).second);
  // {0,0,0,0}, {1,0,0}, {2,0,0}, {1,1}, {2,1}, {2,2}
  EXPECT_EQ(seen.size(), 6u);
}

} // namespace
