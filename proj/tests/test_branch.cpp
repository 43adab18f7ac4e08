#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "wszeged/branch.hpp"
#include "wszeged/oracle.hpp"

namespace {

using wsz::AffineCost;
using wsz::BranchShape;
using wsz::Int;

BranchShape shape(const char* text) { return wsz::parse_branch(text); }

// Independent edge sum for a branch embedded in a tree given by parent links:
// the branch consists of `branch_root` and its descendants; full edges inside
// the branch use true degree sums, the severed half-edge only the branch root's
// degree.
Int embedded_branch_sum(const std::vector<std::optional<wsz::Vertex>>& parent, wsz::Vertex branch_root) {
  const std::size_t n = parent.size();
  std::vector<Int> deg(n, 0);
  std::vector<std::vector<wsz::Vertex>> kids(n);
  for (std::size_t v = 0; v < n; ++v)
    if (parent[v]) {
      ++deg[v];
      ++deg[*parent[v]];
      kids[*parent[v]].push_back(v);
    }
  std::function<Int(wsz::Vertex)> size_of = [&](wsz::Vertex v) {
    Int s = 1;
    for (auto c : kids[v]) s += size_of(c);
    return s;
  };
  const Int N = static_cast<Int>(n);
  Int total = deg[branch_root] * size_of(branch_root) * (N - size_of(branch_root));
  std::function<void(wsz::Vertex)> walk = [&](wsz::Vertex v) {
    for (auto c : kids[v]) {
      const Int s = size_of(c);
      total += (deg[v] + deg[c]) * s * (N - s);
      walk(c);
    }
  };
  walk(branch_root);
  return total;
}

TEST(Canonicalize, OrdersChildrenBySizeDescending) {
  const BranchShape s({BranchShape::leaf(), BranchShape::chain(2)});
  ASSERT_EQ(s.child_count(), 2u);
  EXPECT_EQ(s.children()[0].size(), 2u);
  EXPECT_EQ(s.children()[1].size(), 1u);
  EXPECT_EQ(wsz::print_branch(s), "((())())");
  EXPECT_EQ(wsz::canonicalize({BranchShape::leaf(), BranchShape::chain(2)}), s);
  EXPECT_EQ(wsz::canonicalize({}), BranchShape::leaf());
}

TEST(Canonicalize, DistinctSizeFourShapesStayDistinct) {
  const BranchShape over_path = shape("(((())))");
  const BranchShape over_cherry = shape("((()()))");
  EXPECT_NE(over_path, over_cherry);
  EXPECT_EQ(wsz::all_branch_shapes(4).size(), 4u);
}

TEST(ParseBranch, Examples) {
  EXPECT_EQ(shape("()").size(), 1u);
  EXPECT_EQ(shape("(()())").size(), 3u);
  EXPECT_EQ(shape("(()())").child_count(), 2u);
  EXPECT_EQ(shape("((())(()))").children_sizes(), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(shape(" ( ( ) ( ( ) ) ) ").children_sizes(), (std::vector<std::size_t>{1, 2}));
}

TEST(ParseBranch, Errors) {
  EXPECT_THROW(shape(""), wsz::ParseError);
  EXPECT_THROW(shape("   "), wsz::ParseError);
  EXPECT_THROW(shape("(()"), wsz::ParseError);
  EXPECT_THROW(shape("())"), wsz::ParseError);
  EXPECT_THROW(shape("(x)"), wsz::ParseError);
  EXPECT_THROW(shape("()()"), wsz::ParseError);
}

TEST(ParseBranch, RoundTripOnAllSmallShapes) {
  for (std::size_t m = 1; m <= 8; ++m)
    for (const auto& s : wsz::all_branch_shapes(m)) EXPECT_EQ(wsz::parse_branch(wsz::print_branch(s)), s);
}

TEST(BranchCost, WorkedValues) {
  EXPECT_EQ(wsz::branch_cost(BranchShape::leaf()), (AffineCost{1, -1}));
  EXPECT_EQ(wsz::branch_cost(BranchShape::chain(3)), (AffineCost{17, -37}));
  EXPECT_EQ(wsz::branch_cost(shape("(()())")), (AffineCost{17, -35}));
  EXPECT_EQ(wsz::branch_cost(BranchShape::chain(2)), (AffineCost{7, -11}));
  EXPECT_EQ(wsz::branch_cost(shape("((())())")), (AffineCost{29, -75}));
  EXPECT_EQ(wsz::branch_cost(BranchShape::chain(4)), (AffineCost{31, -87}));
  EXPECT_EQ(wsz::branch_cost(shape("(()()())")), (AffineCost{31, -79}));
  EXPECT_EQ(wsz::branch_cost(shape("((())(()))")), (AffineCost{41, -121}));
  EXPECT_EQ(wsz::branch_cost(BranchShape::chain(3)).to_string(), "17n-37");
}

TEST(BranchCost, DomainIsEnforced) {
  EXPECT_THROW(wsz::branch_cost_at(BranchShape::chain(3), 3), wsz::DomainError);
  EXPECT_EQ(wsz::branch_cost_at(BranchShape::chain(3), 4), 17 * 4 - 37);
}

TEST(BranchCost, AffineConsistencyWithEmbeddedEdgeSum) {
  for (std::size_t m = 1; m <= 8; ++m) {
    for (const auto& s : wsz::all_branch_shapes(m)) {
      for (std::size_t n = m + 1; n <= 200; n += (n < 40 ? 1 : 13)) {
        const auto tree = wsz::shape_to_tree(s, n - m);
        std::vector<std::optional<wsz::Vertex>> parent(n);
        for (wsz::Vertex v = 0; v < n; ++v) parent[v] = tree.parent(v);
        EXPECT_EQ(wsz::branch_cost_at(s, static_cast<Int>(n)), embedded_branch_sum(parent, n - m))
            << wsz::print_branch(s) << " n=" << n;
      }
    }
  }
}

TEST(ShapeToTree, Examples) {
  const auto p4 = wsz::shape_to_tree(BranchShape::leaf(), 3);
  EXPECT_EQ(p4.vertex_count(), 4u);
  EXPECT_EQ(p4.to_graph().max_degree(), 2u);
  EXPECT_EQ(wsz::weighted_szeged_index(p4), 34);
  const auto p5 = wsz::shape_to_tree(BranchShape::chain(2), 3);
  EXPECT_EQ(wsz::weighted_szeged_index(p5), 72);
  const auto t = wsz::shape_to_tree(shape("((())())"), 6);
  EXPECT_EQ(t.vertex_count(), 10u);
  EXPECT_EQ(wsz::half_edge_decomposition(t, 5, 6).branch_summand, 215);
  EXPECT_THROW(wsz::shape_to_tree(BranchShape::leaf(), 0), wsz::DomainError);
}

TEST(HalfEdgeDecomposition, Examples) {
  // P5 rooted at 0, branch = vertices {3, 4}
  std::vector<std::optional<wsz::Vertex>> parent{std::nullopt, 0, 1, 2, 3};
  const auto p5 = wsz::RootedTree::from_parents(parent);
  const auto d = wsz::half_edge_decomposition(p5, 2, 3);
  EXPECT_EQ(d.total(), 72);
  EXPECT_EQ(d.branch_summand, wsz::branch_cost_at(BranchShape::chain(2), 5));

  const auto star = wsz::RootedTree(wsz::parse_edge_list("0 1\n0 2\n0 3"), 0);
  const auto s = wsz::half_edge_decomposition(star, 0, 1);
  EXPECT_EQ(s.branch_summand, 3);
  EXPECT_EQ(s.attachment_term, 9);
  EXPECT_EQ(s.outside_sum, 24);
  EXPECT_EQ(s.total(), 36);
  EXPECT_THROW(wsz::half_edge_decomposition(star, 1, 0), wsz::ValidationError);
}

TEST(HalfEdgeDecomposition, IdentityOnThousandRandomTrees) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 59;
    const auto t = wsz::random_tree(n, rng());
    const Int total = wsz::weighted_szeged_index(t);
    for (wsz::Vertex v = 0; v < n; ++v) {
      const auto p = t.parent(v);
      if (!p) continue;
      const auto d = wsz::half_edge_decomposition(t, *p, v);
      ASSERT_EQ(d.total(), total) << "trial " << trial;
      ASSERT_EQ(d.branch_summand, wsz::branch_cost_at(wsz::branch_shape_of(t, v), static_cast<Int>(n)));
      if (t.children(v).empty()) {
        ASSERT_EQ(d.branch_summand, static_cast<Int>(n) - 1);
      }
    }
  }
}

TEST(HalfEdgeDecomposition, SummandIndependentOfAttachmentDegree) {
  // Same branch, same n, attachment vertices of degree 2, 3 and 4.
  const BranchShape b = shape("((())())");
  const std::size_t m = b.size();
  const std::size_t n = 12;
  for (std::size_t extra_leaves = 0; extra_leaves <= 2; ++extra_leaves) {
    // host: path 0..h-1 (h = n - m - extra_leaves), extra leaves on h-1, branch below h-1
    const std::size_t h = n - m - extra_leaves;
    std::vector<std::optional<wsz::Vertex>> parent(n);
    for (std::size_t v = 1; v < h; ++v) parent[v] = v - 1;
    for (std::size_t i = 0; i < extra_leaves; ++i) parent[h + i] = h - 1;
    const auto local = wsz::shape_parents(b);
    const std::size_t base = h + extra_leaves;
    for (std::size_t v = 0; v < m; ++v) parent[base + v] = local[v] ? base + *local[v] : h - 1;
    const auto t = wsz::RootedTree::from_parents(parent);
    EXPECT_EQ(t.degree(h - 1), 2 + extra_leaves);
    EXPECT_EQ(wsz::half_edge_decomposition(t, h - 1, base).branch_summand, 29 * 12 - 75);
  }
}

TEST(Regularity, Examples) {
  EXPECT_TRUE(wsz::is_regular(BranchShape::leaf()));
  EXPECT_TRUE(wsz::is_regular(wsz::regular_branch({3, 2, 1})));
  EXPECT_FALSE(wsz::is_regular(shape("((())(())())")));
  EXPECT_TRUE(wsz::is_regular(shape("(((()))(()()))")));
  EXPECT_FALSE(wsz::is_level_regular(shape("(((()))(()()))")));
}

TEST(SimplifiedDegreeSequence, Examples) {
  const BranchShape b65 = wsz::regular_branch({4, 3, 2, 1});
  EXPECT_EQ(b65.size(), 65u);
  EXPECT_EQ(wsz::simplified_degree_sequence(b65), (std::vector<std::size_t>{4, 3, 2, 1}));
  EXPECT_TRUE(wsz::simplified_degree_sequence(BranchShape::leaf()).empty());
  const BranchShape b326 = wsz::regular_branch({5, 4, 3, 2, 1});
  EXPECT_EQ(b326.size(), 326u);
  EXPECT_EQ(wsz::simplified_degree_sequence(b326), (std::vector<std::size_t>{5, 4, 3, 2, 1}));
  EXPECT_THROW(wsz::simplified_degree_sequence(shape("((())())")), wsz::DomainError);
}

TEST(AssembleTree, RootWithoutHalfEdge) {
  const auto t = wsz::assemble_tree({BranchShape::chain(2), BranchShape::chain(2), BranchShape::chain(2)});
  EXPECT_EQ(t.vertex_count(), 7u);
  EXPECT_EQ(t.degree(t.root()), 3u);
  EXPECT_EQ(wsz::weighted_szeged_index(t), 204);
  EXPECT_EQ(wsz::branch_shape_of(t, t.root()).children_sizes(), (std::vector<std::size_t>{2, 2, 2}));
}

} // namespace
