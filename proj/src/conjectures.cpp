#include "wszeged/conjectures.hpp"

#include <algorithm>

namespace wsz {

namespace {

std::vector<Vertex> path_to(const RootedTree& t, Vertex v) {
  std::vector<Vertex> path{v};
  while (auto p = t.parent(path.back())) path.push_back(*p);
  std::reverse(path.begin(), path.end());
  return path;
}

std::string range_of(Int n) { return n > 0 ? "n = " + std::to_string(n) : "single tree"; }

void add_count(ConjectureReport& r, const std::string& name, Int value) {
  for (auto& [k, v] : r.counts)
    if (k == name) {
      v += value;
      return;
    }
  r.counts.emplace_back(name, value);
}

} // namespace

void ConjectureReport::absorb(const ConjectureReport& other) {
  holds = holds && other.holds;
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  for (const auto& [k, v] : other.counts) add_count(*this, k, v);
}

ConjectureReport check_non_increasing_degrees(const RootedTree& tree, Int n_label) {
  ConjectureReport r{"non-increasing-degrees", range_of(n_label), true, {}, {}};
  std::vector<bool> below_violation(tree.vertex_count(), false);
  for (Vertex v : tree.bfs_order()) {
    const auto p = tree.parent(v);
    if (!p) continue;
    below_violation[v] = below_violation[*p];
    if (below_violation[v]) continue;
    if (tree.degree(v) > tree.degree(*p)) {
      below_violation[v] = true;
      r.fail({n_label, path_to(tree, v),
              "degree " + std::to_string(tree.degree(*p)) + " -> " + std::to_string(tree.degree(v))});
    }
  }
  return r;
}

ConjectureReport check_non_increasing_degrees(const Graph& tree, Int n_label) {
  ConjectureReport r{"non-increasing-degrees", range_of(n_label), true, {}, {}};
  const std::size_t top = tree.max_degree();
  for (Vertex v = 0; v < tree.vertex_count(); ++v)
    if (tree.degree(v) == top) r.absorb(check_non_increasing_degrees(RootedTree(tree, v), n_label));
  return r;
}

ConjectureReport check_leaf_attachment(const Graph& tree, Int n_label) {
  ConjectureReport r{"leaf-attachment", range_of(n_label), true, {}, {}};
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) != 1) continue;
    const Vertex u = tree.neighbors(v).front();
    if (tree.degree(u) > 3)
      r.fail({n_label, {u, v}, "leaf attached to a vertex of degree " + std::to_string(tree.degree(u))});
  }
  return r;
}

ConjectureReport check_max_degree(const Graph& tree, std::size_t bound, Int n_label) {
  ConjectureReport r{"max-degree", range_of(n_label), true, {}, {}};
  for (Vertex v = 0; v < tree.vertex_count(); ++v)
    if (tree.degree(v) > bound)
      r.fail({n_label, {v}, "degree " + std::to_string(tree.degree(v)) + " exceeds " + std::to_string(bound)});
  add_count(r, "max_degree", static_cast<Int>(tree.max_degree()));
  return r;
}

ConjectureReport check_main_branch_regularity(const RootedTree& tree,
                                              const std::vector<std::size_t>& regular_branch_orders,
                                              Int n_label) {
  ConjectureReport r{"main-branch-regularity", range_of(n_label), true, {}, {}};
  Int unequal = 0;
  Int irregular_order = 0;
  Int both = 0;
  std::vector<Witness> offenders;
  for (Vertex c : tree.children(tree.root())) {
    const BranchShape shape = branch_shape_of(tree, c);
    const bool fails_a = !is_regular(shape);
    const bool fails_b = !std::binary_search(regular_branch_orders.begin(), regular_branch_orders.end(), shape.size());
    unequal += fails_a;
    irregular_order += fails_b;
    if (fails_a && fails_b) {
      ++both;
      offenders.push_back({n_label, {tree.root(), c}, "main branch of order " + std::to_string(shape.size()) + " " +
                                                          print_branch(shape)});
    }
  }
  add_count(r, "unequal_children", unequal);
  add_count(r, "irregular_order", irregular_order);
  add_count(r, "both", both);
  if (both > 1)
    for (auto& w : offenders) r.fail(std::move(w));
  return r;
}

std::vector<std::size_t> regular_branch_orders(const ThresholdTable& table) {
  std::vector<std::size_t> out{1};
  for (const auto& row : table.rows) {
    const auto& c = row.children;
    if (std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end()) out.push_back(row.size);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> regular_orders(OrderKind kind, std::size_t max_order, Int n_max, ScanOptions options) {
  if (max_order < 1) throw DomainError("order must be at least 1");
  if (max_order == 1) return {1};
  if (kind == OrderKind::Branch) return regular_branch_orders(threshold_table(max_order, n_max, options));
  std::vector<std::size_t> out{1};
  for (std::size_t n = 2; n <= max_order; ++n) {
    const OptimalTree t = minimal_tree(static_cast<Int>(n), options.dp);
    const bool regular = std::any_of(t.classes.begin(), t.classes.end(), [](const OptimalTreeClass& c) {
      return std::any_of(c.max_degree_rootings.begin(), c.max_degree_rootings.end(), [](const Structure& s) {
        return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
      });
    });
    if (regular) out.push_back(n);
  }
  return out;
}

std::vector<ConjectureReport> conjecture_sweep(Int n_lo, Int n_hi,
                                               const std::vector<std::size_t>& regular_branch_orders,
                                               std::size_t degree_bound) {
  if (n_lo < 2 || n_hi < n_lo) throw DomainError("conjecture sweep needs 2 <= n_lo <= n_hi");
  const std::string range = "n = " + std::to_string(n_lo) + ".." + std::to_string(n_hi);
  std::vector<ConjectureReport> out{
      {"non-increasing-degrees", range, true, {}, {}},
      {"leaf-attachment", range, true, {}, {}},
      {"max-degree", range, true, {}, {}},
      {"main-branch-regularity", range, true, {}, {}},
  };
  Int observed_max_degree = 0;
  for (Int n = n_lo; n <= n_hi; ++n) {
    const OptimalTree t = minimal_tree(n);
    for (const auto& c : t.classes) {
      const Graph g = c.tree.to_graph();
      out[0].absorb(check_non_increasing_degrees(g, n));
      out[1].absorb(check_leaf_attachment(g, n));
      auto md = check_max_degree(g, degree_bound, n);
      observed_max_degree = std::max<Int>(observed_max_degree, static_cast<Int>(g.max_degree()));
      md.counts.clear();
      out[2].absorb(md);
      out[3].absorb(check_main_branch_regularity(c.tree, regular_branch_orders, n));
    }
  }
  out[2].counts.emplace_back("max_degree", observed_max_degree);
  return out;
}

} // namespace wsz
