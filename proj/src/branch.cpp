#include "wszeged/branch.hpp"

#include <algorithm>
#include <functional>

namespace wsz {

namespace {

Int as_int(std::size_t v) { return static_cast<Int>(v); }

void sort_children(std::vector<BranchShape>& children) {
  std::sort(children.begin(), children.end(),
            [](const BranchShape& a, const BranchShape& b) { return canonical_order(a, b) < 0; });
}

} // namespace

BranchShape::BranchShape(std::vector<BranchShape> children) : children_(std::move(children)) {
  sort_children(children_);
  for (const auto& c : children_) size_ += c.size_;
}

BranchShape BranchShape::chain(std::size_t size) {
  if (size == 0) throw DomainError("a branch has at least one vertex");
  BranchShape s;
  for (std::size_t i = 1; i < size; ++i) s = BranchShape(std::vector<BranchShape>{std::move(s)});
  return s;
}

std::vector<std::size_t> BranchShape::children_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(children_.size());
  for (const auto& c : children_) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::strong_ordering canonical_order(const BranchShape& a, const BranchShape& b) {
  if (a.size() != b.size()) return b.size() <=> a.size();
  const auto& ca = a.children();
  const auto& cb = b.children();
  const std::size_t common = std::min(ca.size(), cb.size());
  for (std::size_t i = 0; i < common; ++i)
    if (auto c = canonical_order(ca[i], cb[i]); c != 0) return c;
  // Same total size: fewer children means the first ones were larger.
  return ca.size() <=> cb.size();
}

std::strong_ordering operator<=>(const BranchShape& a, const BranchShape& b) {
  return canonical_order(a, b);
}

BranchShape canonicalize(std::vector<BranchShape> children) {
  return BranchShape(std::move(children));
}

BranchShape parse_branch(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
  };
  std::function<BranchShape()> parse_node = [&]() -> BranchShape {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(')
      throw ParseError("expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<BranchShape> children;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unbalanced parentheses");
      if (text[pos] == ')') {
        ++pos;
        return BranchShape(std::move(children));
      }
      children.push_back(parse_node());
    }
  };
  skip_ws();
  if (pos >= text.size()) throw ParseError("empty branch description");
  BranchShape shape = parse_node();
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after branch at offset " + std::to_string(pos));
  return shape;
}

std::string print_branch(const BranchShape& shape) {
  std::string out = "(";
  for (const auto& c : shape.children()) out += print_branch(c);
  out += ')';
  return out;
}

AffineCost branch_cost(const BranchShape& shape) {
  const Int d = as_int(shape.child_count() + 1);
  const Int m = as_int(shape.size());
  // d*m*(n-m) = (d*m) n - d*m^2
  AffineCost cost{checked_mul(d, m), -checked_mul(d, checked_mul(m, m))};
  for (const auto& c : shape.children()) {
    const Int ni = as_int(c.size());
    cost = cost + AffineCost{checked_mul(d, ni), -checked_mul(d, checked_mul(ni, ni))};
    cost = cost + branch_cost(c);
  }
  return cost;
}

Int branch_cost_at(const BranchShape& shape, Int n) {
  if (n < as_int(shape.size()) + 1)
    throw DomainError("branch of size " + std::to_string(shape.size()) +
                      " needs a tree of order at least " + std::to_string(shape.size() + 1));
  return branch_cost(shape).at(n);
}

bool is_regular(const BranchShape& shape) {
  const auto& ch = shape.children();
  return std::all_of(ch.begin(), ch.end(),
                     [&](const BranchShape& c) { return c.size() == ch.front().size(); });
}

bool is_level_regular(const BranchShape& shape) {
  const auto& ch = shape.children();
  if (ch.empty()) return true;
  if (!std::all_of(ch.begin(), ch.end(), [&](const BranchShape& c) { return c == ch.front(); }))
    return false;
  return is_level_regular(ch.front());
}

std::vector<std::size_t> simplified_degree_sequence(const BranchShape& shape) {
  if (!is_level_regular(shape))
    throw DomainError("simplified degree sequence needs a level-regular branch");
  std::vector<std::size_t> seq;
  for (const BranchShape* s = &shape; !s->is_leaf(); s = &s->children().front())
    seq.push_back(s->child_count());
  return seq;
}

BranchShape regular_branch(const std::vector<std::size_t>& child_counts) {
  BranchShape s;
  for (auto it = child_counts.rbegin(); it != child_counts.rend(); ++it) {
    if (*it == 0) throw DomainError("child counts of a regular branch must be positive");
    s = BranchShape(std::vector<BranchShape>(*it, s));
  }
  return s;
}

namespace {

void append_parents(const BranchShape& shape, std::optional<Vertex> parent,
                    std::vector<std::optional<Vertex>>& out) {
  const Vertex self = out.size();
  out.push_back(parent);
  for (const auto& c : shape.children()) append_parents(c, self, out);
}

} // namespace

std::vector<std::optional<Vertex>> shape_parents(const BranchShape& shape) {
  std::vector<std::optional<Vertex>> out;
  out.reserve(shape.size());
  append_parents(shape, std::nullopt, out);
  return out;
}

RootedTree shape_to_tree(const BranchShape& shape, std::size_t host_path_length) {
  if (host_path_length < 1) throw DomainError("host path needs at least one vertex");
  std::vector<std::optional<Vertex>> parent(host_path_length);
  for (Vertex v = 1; v < host_path_length; ++v) parent[v] = v - 1;
  append_parents(shape, host_path_length - 1, parent);
  return RootedTree::from_parents(std::move(parent));
}

BranchShape branch_shape_of(const RootedTree& tree, Vertex v) {
  std::vector<BranchShape> children;
  for (Vertex c : tree.children(v)) children.push_back(branch_shape_of(tree, c));
  return BranchShape(std::move(children));
}

RootedTree assemble_tree(const std::vector<BranchShape>& root_children) {
  std::vector<std::optional<Vertex>> parent{std::nullopt};
  for (const auto& c : root_children) append_parents(c, 0, parent);
  return RootedTree::from_parents(std::move(parent));
}

HalfEdgeDecomposition half_edge_decomposition(const RootedTree& tree, Vertex u, Vertex v) {
  if (v >= tree.vertex_count() || tree.parent(v) != u)
    throw ValidationError("(" + std::to_string(u) + ", " + std::to_string(v) +
                          ") is not a parent-child edge");
  const Int n = as_int(tree.vertex_count());
  std::vector<bool> inside(tree.vertex_count(), false);
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    inside[x] = true;
    for (Vertex c : tree.children(x)) stack.push_back(c);
  }
  HalfEdgeDecomposition out;
  const Int nv = as_int(tree.subtree_size(v));
  const Int split = checked_mul(nv, n - nv);
  out.branch_summand = checked_mul(as_int(tree.degree(v)), split);
  out.attachment_term = checked_mul(as_int(tree.degree(u)), split);
  for (Vertex x = 0; x < tree.vertex_count(); ++x) {
    const auto p = tree.parent(x);
    if (!p || x == v) continue;
    const Int below = as_int(tree.subtree_size(x));
    const Int term = checked_mul(as_int(tree.degree(x) + tree.degree(*p)), checked_mul(below, n - below));
    if (inside[x]) out.branch_summand = checked_add(out.branch_summand, term);
    else out.outside_sum = checked_add(out.outside_sum, term);
  }
  return out;
}

} // namespace wsz
