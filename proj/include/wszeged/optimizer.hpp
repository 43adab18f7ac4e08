#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wszeged/branch.hpp"
#include "wszeged/envelope.hpp"
#include "wszeged/exact.hpp"
#include "wszeged/graph.hpp"

namespace wsz {

struct DpOptions {
  // Upper bound on the number of children of any vertex; unset means none.
  std::optional<std::size_t> max_children;
  // Also evaluate a branch of size n inside a tree of order n (the half-edge
  // term vanishes). Used by the threshold scan; off for ordinary queries.
  bool allow_whole_tree = false;
};

struct PartitionResult {
  Int value = 0;
  std::vector<Structure> argmin; // each ascending, list sorted lexicographically
};

// min over multisets {x_1..x_k}, x_i >= 1, sum = s, of sum score[x_i].
// score[0] is ignored; score must cover 1..s.
PartitionResult partition_min(std::size_t s, std::size_t k, std::span<const Int> score);

// Minimal ending branches B(m; n) for m = 1..max_size at a fixed tree order n,
// with every co-optimal children-size multiset.
class BranchTable {
public:
  BranchTable(Int n, std::size_t max_size, DpOptions options = {});

  Int total_order() const noexcept { return n_; }
  std::size_t max_size() const noexcept { return cost_.size() - 1; }
  const DpOptions& options() const noexcept { return options_; }

  Int cost(std::size_t m) const;
  const std::vector<Structure>& structures(std::size_t m) const;
  bool is_optimal(std::size_t m, const Structure& children) const;

  // Cost of a root of size m whose children are minimal branches of the
  // given sizes; m = 1 + sum(children).
  Int structure_cost(const Structure& children) const;

  // Co-optimal canonical shapes of size m, at most `limit` of them.
  std::vector<BranchShape> shapes(std::size_t m, std::size_t limit = 1024) const;
  BranchShape shape(std::size_t m) const { return shapes(m, 1).front(); }

  // Root partitions for a whole tree of order n: coefficient k per child,
  // no half-edge. Requires max_size == n - 1.
  PartitionResult tree_root_partitions() const;

private:
  struct Table {
    Int coefficient = 0;
    std::vector<std::vector<Int>> h; // h[j][t]: j parts summing to t
    std::vector<Int> score;          // score[x] = coefficient * x (n - x) + B(x)
    std::size_t columns = 0;
  };
  Table& table(Int coefficient, std::size_t rows, std::size_t columns) const;
  Int score(Int coefficient, std::size_t x) const;
  void backtrack(const Table& t, std::size_t j, std::size_t s, std::size_t bound, Structure& acc,
                 std::vector<Structure>& out) const;

  Int n_;
  DpOptions options_;
  std::vector<Int> cost_;
  std::vector<std::vector<Structure>> structures_;
  mutable std::map<Int, Table> tables_;
};

// Children-size shorthand such as "16,16,16,18" (commas and/or whitespace).
Structure parse_children_sizes(std::string_view text);

// A root whose children are minimal branches of the given sizes inside a tree
// of order n; n = 0 means the shape is a whole tree (n = 1 + sum of sizes).
BranchShape shape_from_children_sizes(const Structure& sizes, Int n = 0);

// Requires 1 <= max_size <= n - 1.: requires 1 <= max_size <= n - 1.
BranchTable minimal_branches(Int n, std::size_t max_size, DpOptions options = {});

struct OptimalTreeClass {
  std::string canonical;                // free-tree canonical encoding
  Structure representative;             // rooting reported in tables
  std::vector<Structure> max_degree_rootings;
  RootedTree tree;                      // rooted at the representative root
};

struct OptimalTree {
  Int n = 0;
  Int cost = 0;
  std::vector<Structure> root_structures;   // every co-optimal root multiset
  std::vector<OptimalTreeClass> classes;    // one per isomorphism class
  bool truncated = false;                   // class expansion hit its limit
};

// Minimum weighted Szeged index over all trees of order n >= 2. Classes are
// ordered by representative; the representative rooting is a maximum-degree
// vertex with the smallest largest child, ties broken lexicographically.
OptimalTree minimal_tree(Int n, DpOptions options = {}, std::size_t class_limit = 4096);

// Exact envelopes B(m; .) for m = 1..max_size, each on [m + 1, inf)
// (or [m, inf) with allow_whole_tree).
std::vector<CostEnvelope> branch_envelopes(std::size_t max_size, DpOptions options = {});

struct ThresholdRow {
  std::size_t size = 0;
  Int threshold = 0;              // smallest N with weak optimality on [N, n_max]
  Structure children;
  bool starred = false;           // co-optimal alternative to the previous row
  bool certified = false;         // envelope confirms stability to infinity
  std::optional<Int> envelope_threshold;
  Rational last_breakpoint;       // last breakpoint of the envelope of this size
  std::size_t child_count() const noexcept { return children.size(); }
};

struct ThresholdTable {
  std::size_t max_size = 0;
  Int n_max = 0;
  std::vector<ThresholdRow> rows;
  std::vector<std::string> warnings;
};

struct ScanOptions {
  DpOptions dp;
  unsigned jobs = 1;
};

// Threshold rows for sizes 2..max_size. The scan evaluates n from the size
// itself (whole-tree case) up to n_max.
ThresholdTable threshold_table(std::size_t max_size, Int n_max, ScanOptions options = {});

struct CrossingReport {
  AffineCost cost_a;
  AffineCost cost_b;
  AffineCost difference;            // cost_a - cost_b
  Int domain_start = 0;             // size + 1
  std::optional<Rational> crossing; // where the difference vanishes, if anywhere in the domain
  int sign_at_start = 0;            // sign of the difference at domain_start
  int sign_at_infinity = 0;         // sign for all sufficiently large n
};

CrossingReport compare_structures(const BranchShape& a, const BranchShape& b);

struct Order326Row {
  Int n = 0;
  Int candidate_cost = 0;         // children 103, 103, 119
  Int regular_cost = 0;           // five children of order 65
  Int regular_shape_cost = 0;     // literal [5,4,3,2,1] shape
  Int optimum_cost = 0;           // B(326; n)
  std::vector<Structure> optimum; // co-optimal structures of size 326
  bool optimum_regular = false;
};

struct Order326Report {
  Int n_lo = 0;
  Int n_hi = 0;
  std::vector<Order326Row> rows;
  std::optional<Int> tail_start;  // candidate strictly cheaper on [tail_start, n_hi]
  std::optional<Int> last_regular_win; // largest n where regular <= candidate
};

Order326Report regular_vs_optimal_326(Int n_lo, Int n_hi, Int step = 1, ScanOptions options = {});

} // namespace wsz
