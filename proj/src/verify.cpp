#include "wszeged/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "wszeged/oracle.hpp"
#include "wszeged/optimizer.hpp"

namespace wsz {

namespace {

std::string show(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

VerifyCheck tree_oracle(std::size_t n) {
  VerifyCheck c{"tree oracle n=" + std::to_string(n), true, {}};
  const BruteForceTree brute = brute_force_min_tree(n);
  const OptimalTree dp = minimal_tree(static_cast<Int>(n));
  std::set<std::string> brute_classes;
  for (const auto& g : brute.minimizers) brute_classes.insert(free_tree_encoding(g));
  std::set<std::string> dp_classes;
  for (const auto& cl : dp.classes) dp_classes.insert(cl.canonical);
  if (brute.cost != dp.cost) {
    c.passed = false;
    c.detail = "cost " + std::to_string(dp.cost) + " vs exhaustive " + std::to_string(brute.cost);
  } else if (dp_classes != brute_classes && (dp.truncated || !std::includes(brute_classes.begin(), brute_classes.end(),
                                                                             dp_classes.begin(), dp_classes.end()))) {
    c.passed = false;
    c.detail = "optimal classes differ from the exhaustive minimizers";
  } else if (dp_classes != brute_classes) {
    c.passed = false;
    c.detail = std::to_string(brute_classes.size() - dp_classes.size()) + " exhaustive minimizers missing from DP";
  } else {
    c.detail = "cost " + std::to_string(dp.cost) + ", " + std::to_string(brute.trees_examined) + " trees, " +
               std::to_string(dp_classes.size()) + " optimal class(es)";
  }
  return c;
}

VerifyCheck branch_oracle(std::size_t m, std::size_t n_max) {
  VerifyCheck c{"branch oracle m=" + std::to_string(m), true, {}};
  for (std::size_t n = m + 1; n <= n_max && c.passed; ++n) {
    const BruteForceBranch brute = brute_force_min_branch(m, static_cast<Int>(n));
    const BranchTable table(static_cast<Int>(n), m);
    auto dp_shapes = table.shapes(m, 1u << 20);
    auto brute_shapes = brute.minimizers;
    std::sort(dp_shapes.begin(), dp_shapes.end());
    std::sort(brute_shapes.begin(), brute_shapes.end());
    if (table.cost(m) != brute.cost || dp_shapes != brute_shapes) {
      c.passed = false;
      c.detail = "n=" + std::to_string(n) + ": DP " + std::to_string(table.cost(m)) + " (" +
                 std::to_string(dp_shapes.size()) + " shapes) vs exhaustive " + std::to_string(brute.cost) + " (" +
                 std::to_string(brute_shapes.size()) + " shapes)";
    }
  }
  if (c.passed) c.detail = "n = " + std::to_string(m + 1) + ".." + std::to_string(n_max);
  return c;
}

VerifyCheck affine_costs(std::size_t max_size, std::size_t n_max) {
  VerifyCheck c{"affine cost vs edge sum, size <= " + std::to_string(max_size), true, {}};
  std::size_t checked = 0;
  for (std::size_t m = 1; m <= max_size && c.passed; ++m) {
    for (const auto& shape : all_branch_shapes(m)) {
      for (std::size_t n = m + 1; n <= n_max && c.passed; ++n) {
        const RootedTree t = shape_to_tree(shape, n - m);
        const auto d = half_edge_decomposition(t, n - m - 1, n - m);
        if (d.branch_summand != branch_cost_at(shape, static_cast<Int>(n))) {
          c.passed = false;
          c.detail = print_branch(shape) + " at n=" + std::to_string(n) + ": affine " +
                     branch_cost(shape).to_string() + " vs edge sum " + std::to_string(d.branch_summand);
        }
        ++checked;
      }
    }
  }
  if (c.passed) c.detail = std::to_string(checked) + " (shape, n) pairs";
  return c;
}

VerifyCheck ray_beats_cherry(std::size_t n_max) {
  VerifyCheck c{"3-ray cheaper than a 3-vertex star branch", true, {}};
  const BranchShape ray = BranchShape::chain(3);
  const BranchShape cherry({BranchShape::leaf(), BranchShape::leaf()});
  for (Int n = 4; n <= static_cast<Int>(n_max); ++n) {
    if (branch_cost_at(ray, n) >= branch_cost_at(cherry, n)) {
      c.passed = false;
      c.detail = "fails at n=" + std::to_string(n);
      return c;
    }
  }
  c.detail = branch_cost(ray).to_string() + " < " + branch_cost(cherry).to_string() + " for n = 4.." +
             std::to_string(n_max);
  return c;
}

Graph relabeled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(g.vertex_count(), std::move(edges));
}

VerifyCheck random_invariants(std::size_t count, std::uint64_t seed) {
  VerifyCheck c{"random-tree invariants", true, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count && c.passed; ++i) {
    const std::size_t n = 2 + rng() % 59;
    const RootedTree t = random_tree(n, rng());
    const Graph g = t.to_graph();
    const Int wsz = weighted_szeged_index(t);
    const Graph h = relabeled(g, rng);
    std::string failure;
    if (weighted_szeged_index(h) != wsz || szeged_index(h) != szeged_index(g)) failure = "relabeling changed the index";
    if (weighted_szeged_index_bfs(g) != wsz || szeged_index_bfs(g) != szeged_index(t))
      failure = "BFS and subtree-size paths disagree";
    for (Vertex v = 0; v < n && failure.empty(); ++v) {
      const auto p = t.parent(v);
      if (!p) continue;
      const auto split = edge_split(g, *p, v);
      if (split.n_u + split.n_v != n) failure = "edge split does not cover the tree";
      if (half_edge_decomposition(t, *p, v).total() != wsz) failure = "half-edge decomposition does not add up";
    }
    if (!failure.empty()) {
      c.passed = false;
      c.detail = failure + " (tree " + std::to_string(i) + ", n=" + std::to_string(n) + ")";
    }
  }
  if (c.passed) c.detail = std::to_string(count) + " trees";
  return c;
}

VerifyCheck envelope_agreement(std::size_t max_size, Int n_max) {
  VerifyCheck c{"envelope vs fixed-n DP", true, {}};
  const auto env = branch_envelopes(max_size);
  for (Int n = 2; n <= n_max && c.passed; ++n) {
    const std::size_t top = std::min<std::size_t>(max_size, static_cast<std::size_t>(n - 1));
    const BranchTable table(n, top);
    for (std::size_t m = 1; m <= top; ++m) {
      if (env[m].at(n) != table.cost(m)) {
        c.passed = false;
        c.detail = "m=" + std::to_string(m) + ", n=" + std::to_string(n);
        break;
      }
      auto tags = env[m].argmin_at(n);
      for (const auto& s : tags)
        if (!table.is_optimal(m, s)) {
          c.passed = false;
          c.detail = "envelope tag " + show(s) + " not optimal at m=" + std::to_string(m) + ", n=" + std::to_string(n);
        }
    }
  }
  if (c.passed) c.detail = "m <= " + std::to_string(max_size) + ", n <= " + std::to_string(n_max);
  return c;
}

} // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.tree_max > kFreeTreeCap) throw LimitError("tree oracle is capped at " + std::to_string(kFreeTreeCap));
  if (options.branch_max > kBranchShapeCap)
    throw LimitError("branch oracle is capped at " + std::to_string(kBranchShapeCap));
  VerifyReport report;
  for (std::size_t n = 2; n <= options.tree_max; ++n) report.checks.push_back(tree_oracle(n));
  for (std::size_t m = 2; m <= options.branch_max; ++m)
    report.checks.push_back(branch_oracle(m, std::max(options.branch_n_max, m + 1)));
  if (options.branch_max >= 3) report.checks.push_back(ray_beats_cherry(options.branch_n_max));
  report.checks.push_back(affine_costs(std::min<std::size_t>(options.branch_max, 10), options.branch_n_max));
  report.checks.push_back(random_invariants(options.random_trees, options.seed));
  report.checks.push_back(envelope_agreement(20, 120));
  return report;
}

} // namespace wsz
