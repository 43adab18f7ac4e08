#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wszeged/exact.hpp"
#include "wszeged/graph.hpp"

namespace wsz {

// Rooted unlabeled tree describing an ending branch. Always held in
// canonical form: children ordered by size descending, then recursively by
// the same order. Two shapes compare equal iff they are isomorphic as
// rooted trees.
class BranchShape {
public:
  BranchShape() = default; // a single vertex
  explicit BranchShape(std::vector<BranchShape> children);

  static BranchShape leaf() { return {}; }
  // A rooted path on `size` vertices, rooted at an end.
  static BranchShape chain(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  const std::vector<BranchShape>& children() const noexcept { return children_; }
  std::size_t child_count() const noexcept { return children_.size(); }
  bool is_leaf() const noexcept { return children_.empty(); }

  // Child sizes in ascending order, e.g. {1, 2}.
  std::vector<std::size_t> children_sizes() const;

  friend std::strong_ordering operator<=>(const BranchShape& a, const BranchShape& b);
  friend bool operator==(const BranchShape& a, const BranchShape& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

private:
  std::vector<BranchShape> children_;
  std::size_t size_ = 1;
};

// Canonical order: larger shapes first, equal sizes compared child by child.
std::strong_ordering canonical_order(const BranchShape& a, const BranchShape& b);

// Sorts children recursively. BranchShape already stores canonical form, so
// this exists for callers that build children lists incrementally.
BranchShape canonicalize(std::vector<BranchShape> children);

// Nested parentheses: "()" is a leaf, "(c1 c2 ... ck)" an internal vertex.
// Whitespace between groups is ignored. Output is canonical with no spaces.
BranchShape parse_branch(std::string_view text);
std::string print_branch(const BranchShape& shape);

// d_v * n_v * (n - n_v) + sum_i d_v * n_i * (n - n_i) + sum_i cost(child_i),
// where d_v = child count + 1 counts the half-edge toward the host tree.
AffineCost branch_cost(const BranchShape& shape);

// branch_cost evaluated at n; throws DomainError unless n >= size + 1.
Int branch_cost_at(const BranchShape& shape, Int n);

bool is_regular(const BranchShape& shape);       // root children all of equal order
bool is_level_regular(const BranchShape& shape); // all children identical, recursively

// Child counts along a root-to-leaf path of a level-regular shape, leaf
// excluded. Throws DomainError for shapes that are not level-regular.
std::vector<std::size_t> simplified_degree_sequence(const BranchShape& shape);

// The level-regular shape with the given child counts ({} is a leaf).
BranchShape regular_branch(const std::vector<std::size_t>& child_counts);

// Materializes the shape with its root as vertex 0 and children numbered in
// preorder. Returned as parent links (root has none).
std::vector<std::optional<Vertex>> shape_parents(const BranchShape& shape);

// The branch attached at one end of a path of `host_path_length` extra
// vertices. The tree is rooted at the far end of that path, so the branch is
// the component not containing the root. The branch root is vertex
// `host_path_length`; the host path occupies 0..host_path_length-1.
RootedTree shape_to_tree(const BranchShape& shape, std::size_t host_path_length);

// The shape of the subtree below v in a rooted tree.
BranchShape branch_shape_of(const RootedTree& tree, Vertex v);

// A tree whose root has the given child branches (no half-edge at the root).
RootedTree assemble_tree(const std::vector<BranchShape>& root_children);

struct HalfEdgeDecomposition {
  Int branch_summand = 0;  // branch edges plus d_v * n_v * (n - n_v)
  Int attachment_term = 0; // d_u * n_v * (n - n_v)
  Int outside_sum = 0;     // every edge not inside the branch and not uv
  Int total() const { return checked_add(checked_add(branch_summand, attachment_term), outside_sum); }
};

// Splits wSz(tree) around the edge (u, v), where v is the child side. The
// three summands always add up to weighted_szeged_index(tree).
HalfEdgeDecomposition half_edge_decomposition(const RootedTree& tree, Vertex u, Vertex v);

} // namespace wsz
