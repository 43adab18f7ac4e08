#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wszeged/graph.hpp"
#include "wszeged/optimizer.hpp"

namespace wsz {

struct Witness {
  Int n = 0;                 // tree order the witness belongs to
  std::vector<Vertex> path;  // offending vertex or root-to-vertex path
  std::string detail;
};

struct ConjectureReport {
  std::string id;
  std::string range;
  bool holds = true;
  std::vector<Witness> witnesses;                  // non-empty whenever !holds
  std::vector<std::pair<std::string, Int>> counts; // named tallies, in insertion order

  void fail(Witness w) {
    holds = false;
    witnesses.push_back(std::move(w));
  }
  // Folds another report of the same conjecture into this one.
  void absorb(const ConjectureReport& other);
};

// Degrees never increase along a root-to-leaf path. Witnesses are the
// shallowest violating edges, reported as root-to-child paths.
ConjectureReport check_non_increasing_degrees(const RootedTree& tree, Int n_label = 0);
// Runs from every maximum-degree vertex; the verdict is the conjunction.
ConjectureReport check_non_increasing_degrees(const Graph& tree, Int n_label = 0);

// Every neighbour of a degree-1 vertex has degree <= 3.
ConjectureReport check_leaf_attachment(const Graph& tree, Int n_label = 0);

ConjectureReport check_max_degree(const Graph& tree, std::size_t bound = 6, Int n_label = 0);

// Main branches (subtrees of the root's children) that are not regular:
//   "unequal_children"   root children of unequal order,
//   "irregular_order"    order missing from `regular_branch_orders`,
//   "both"               failing both readings.
// The verdict holds iff "both" <= 1.
ConjectureReport check_main_branch_regularity(const RootedTree& tree,
                                              const std::vector<std::size_t>& regular_branch_orders,
                                              Int n_label = 0);

enum class OrderKind { Branch, Tree };

// Orders whose minimal structure has all children of equal order (ties count
// when any co-optimal structure qualifies). Branch orders use the large-n
// structure from threshold_table; tree orders use every maximum-degree
// rooting of every optimal tree. Order 1 is always included.
std::vector<std::size_t> regular_orders(OrderKind kind, std::size_t max_order, Int n_max = 1200,
                                        ScanOptions options = {});
std::vector<std::size_t> regular_branch_orders(const ThresholdTable& table);

// All four checks over every optimal tree class for n in [n_lo, n_hi].
// Order: non-increasing degrees, leaf attachment, max degree, main branches.
std::vector<ConjectureReport> conjecture_sweep(Int n_lo, Int n_hi,
                                               const std::vector<std::size_t>& regular_branch_orders,
                                               std::size_t degree_bound = 6);

} // namespace wsz
