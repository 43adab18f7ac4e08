#include "wszeged/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "wszeged/oracle.hpp"

namespace wsz {

namespace {

constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

Int as_int(std::size_t v) { return static_cast<Int>(v); }

// Largest possible sum of squares of k positive parts adding up to s.
Int max_square_sum(Int s, Int k) {
  const Int big = s - k + 1;
  return checked_add(checked_mul(big, big), k - 1);
}

// Lower bound on a branch of size m with k children at order n: the child
// half-edges each contribute at least n - 1.
Int branch_lower_bound(Int n, Int m, Int k) {
  const Int s = m - 1;
  const Int spread = checked_sub(checked_add(checked_mul(m, n - m), checked_mul(n, s)),
                                 checked_add(max_square_sum(s, k), k - 1));
  return checked_add(checked_mul(k + 1, spread), checked_mul(k, n - 1));
}

Int tree_lower_bound(Int n, Int k) {
  const Int s = n - 1;
  const Int spread = checked_sub(checked_mul(n, s), checked_add(max_square_sum(s, k), k - 1));
  return checked_add(checked_mul(k, spread), checked_mul(k, n - 1));
}

bool all_equal(const Structure& s) {
  return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
}

void sort_unique(std::vector<Structure>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename Fn>
void parallel_for(Int lo, Int hi, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || hi - lo < 2) {
    for (Int i = lo; i <= hi; ++i) fn(i);
    return;
  }
  std::atomic<Int> next{lo};
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      try {
        for (Int i = next++; i <= hi; i = next++) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

} // namespace

PartitionResult partition_min(std::size_t s, std::size_t k, std::span<const Int> score) {
  if (k < 1 || k > s) throw DomainError("partition needs 1 <= k <= s");
  if (score.size() < s + 1) throw DomainError("score table does not cover 1..s");
  // h[j][t]: min over j parts summing to t.
  std::vector<std::vector<Int>> h(k + 1, std::vector<Int>(s + 1, kInf));
  h[0][0] = 0;
  for (std::size_t j = 1; j <= k; ++j)
    for (std::size_t t = j; t <= s; ++t)
      for (std::size_t x = 1; x + (j - 1) <= t; ++x)
        if (h[j - 1][t - x] < kInf) h[j][t] = std::min(h[j][t], checked_add(h[j - 1][t - x], score[x]));

  PartitionResult out{h[k][s], {}};
  Structure acc;
  // Non-increasing parts, so every multiset is reached once.
  auto walk = [&](auto&& self, std::size_t j, std::size_t t, std::size_t bound) -> void {
    if (j == 0) {
      if (t == 0) out.argmin.emplace_back(acc.rbegin(), acc.rend());
      return;
    }
    for (std::size_t x = std::min(bound, t - (j - 1)); x >= 1; --x) {
      if (x * j < t) break;
      if (h[j - 1][t - x] < kInf && h[j - 1][t - x] + score[x] == h[j][t]) {
        acc.push_back(x);
        self(self, j - 1, t - x, x);
        acc.pop_back();
      }
    }
  };
  walk(walk, k, s, s);
  sort_unique(out.argmin);
  return out;
}

BranchTable::BranchTable(Int n, std::size_t max_size, DpOptions options)
    : n_(n), options_(options) {
  if (n < 2) throw DomainError("tree order must be at least 2");
  if (max_size < 1) throw DomainError("branch size must be at least 1");
  const Int limit = options_.allow_whole_tree ? n : n - 1;
  if (as_int(max_size) > limit)
    throw DomainError("branch size " + std::to_string(max_size) + " does not fit in a tree of order " +
                      std::to_string(n));
  if (options_.max_children && *options_.max_children < 1)
    throw DomainError("child cap must be positive");

  cost_.assign(max_size + 1, 0);
  structures_.assign(max_size + 1, {});
  cost_[1] = n - 1;
  structures_[1] = {Structure{}};

  for (std::size_t m = 2; m <= max_size; ++m) {
    const std::size_t s = m - 1;
    const Int mi = as_int(m);
    std::size_t k_max = s;
    if (options_.max_children) k_max = std::min(k_max, *options_.max_children);
    Int best = kInf;
    std::vector<std::size_t> best_k;
    for (std::size_t k = 1; k <= k_max; ++k) {
      if (branch_lower_bound(n, mi, as_int(k)) > best) break;
      const Int c = as_int(k) + 1;
      const Table& t = table(c, k + 1, s + 1);
      if (t.h[k][s] >= kInf) continue;
      const Int v = checked_add(checked_mul(c, checked_mul(mi, n - mi)), t.h[k][s]);
      if (v < best) {
        best = v;
        best_k.clear();
      }
      if (v == best) best_k.push_back(k);
    }
    cost_[m] = best;
    for (std::size_t k : best_k) {
      Structure acc;
      backtrack(tables_.at(as_int(k) + 1), k, s, s, acc, structures_[m]);
    }
    sort_unique(structures_[m]);
  }
}

Int BranchTable::score(Int coefficient, std::size_t x) const {
  const Int xi = as_int(x);
  const Int v = checked_add(checked_mul(coefficient, checked_mul(xi, n_ - xi)), cost_[x]);
  if (v >= kInf) throw OverflowError("branch cost exceeds the exact range");
  return v;
}

BranchTable::Table& BranchTable::table(Int coefficient, std::size_t rows, std::size_t columns) const {
  Table& t = tables_[coefficient];
  t.coefficient = coefficient;
  while (t.score.size() < columns) t.score.push_back(t.score.empty() ? 0 : score(coefficient, t.score.size()));
  auto fill = [&](std::size_t j, std::size_t col) {
    Int best = kInf;
    if (j == 0) {
      best = col == 0 ? 0 : kInf;
    } else {
      const Int* prev = t.h[j - 1].data();
      const Int* sc = t.score.data();
      // prev < kInf and scores stay far below it, so the sum cannot overflow.
      for (std::size_t x = 1; x + (j - 1) <= col; ++x) best = std::min(best, prev[col - x] + sc[x]);
      if (best >= kInf) best = kInf;
    }
    t.h[j][col] = best;
  };
  // New rows over the columns already present, then new columns for all rows.
  while (t.h.size() < rows) {
    t.h.emplace_back(t.columns, kInf);
    const std::size_t j = t.h.size() - 1;
    for (std::size_t col = 0; col < t.columns; ++col) fill(j, col);
  }
  if (columns > t.columns) {
    for (auto& row : t.h) row.resize(columns, kInf);
    for (std::size_t col = t.columns; col < columns; ++col)
      for (std::size_t j = 0; j < t.h.size(); ++j) fill(j, col);
    t.columns = columns;
  }
  return t;
}

void BranchTable::backtrack(const Table& t, std::size_t j, std::size_t s, std::size_t bound, Structure& acc,
                            std::vector<Structure>& out) const {
  if (j == 0) {
    if (s == 0) out.emplace_back(acc.rbegin(), acc.rend());
    return;
  }
  for (std::size_t x = std::min(bound, s - (j - 1)); x >= 1; --x) {
    if (x * j < s) break;
    const Int prev = t.h[j - 1][s - x];
    if (prev >= kInf) continue;
    if (prev + t.score[x] != t.h[j][s]) continue;
    acc.push_back(x);
    backtrack(t, j - 1, s - x, x, acc, out);
    acc.pop_back();
  }
}

Int BranchTable::cost(std::size_t m) const {
  if (m < 1 || m >= cost_.size()) throw DomainError("branch size outside the table");
  return cost_[m];
}

const std::vector<Structure>& BranchTable::structures(std::size_t m) const {
  if (m < 1 || m >= structures_.size()) throw DomainError("branch size outside the table");
  return structures_[m];
}

bool BranchTable::is_optimal(std::size_t m, const Structure& children) const {
  Structure sorted = children;
  std::sort(sorted.begin(), sorted.end());
  const auto& s = structures(m);
  return std::binary_search(s.begin(), s.end(), sorted);
}

Int BranchTable::structure_cost(const Structure& children) const {
  std::size_t m = 1;
  for (auto x : children) m += x;
  const Int mi = as_int(m);
  if (mi > n_) throw DomainError("structure larger than the tree");
  const Int c = as_int(children.size()) + 1;
  Int spread = checked_mul(mi, n_ - mi);
  Int below = 0;
  for (auto x : children) {
    spread = checked_add(spread, checked_mul(as_int(x), n_ - as_int(x)));
    below = checked_add(below, cost(x));
  }
  return checked_add(checked_mul(c, spread), below);
}

std::vector<BranchShape> BranchTable::shapes(std::size_t m, std::size_t limit) const {
  std::map<std::size_t, std::vector<BranchShape>> memo;
  auto expand = [&](auto&& self, std::size_t size) -> const std::vector<BranchShape>& {
    if (auto it = memo.find(size); it != memo.end()) return it->second;
    std::set<BranchShape> found;
    for (const auto& st : structures(size)) {
      std::vector<const std::vector<BranchShape>*> options;
      for (auto x : st) options.push_back(&self(self, x));
      std::vector<std::size_t> pick(st.size(), 0);
      for (;;) {
        std::vector<BranchShape> children;
        for (std::size_t i = 0; i < st.size(); ++i) children.push_back((*options[i])[pick[i]]);
        found.insert(BranchShape(std::move(children)));
        if (found.size() >= limit) break;
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i]->size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
      if (found.size() >= limit) break;
    }
    return memo[size] = std::vector<BranchShape>(found.begin(), found.end());
  };
  return expand(expand, m);
}

PartitionResult BranchTable::tree_root_partitions() const {
  const std::size_t s = max_size();
  if (as_int(s) != n_ - 1) throw DomainError("tree partitions need the full table up to n - 1");
  std::size_t k_max = s;
  if (options_.max_children) k_max = std::min(k_max, *options_.max_children);
  PartitionResult out{kInf, {}};
  std::vector<std::size_t> best_k;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (tree_lower_bound(n_, as_int(k)) > out.value) break;
    const Table& t = table(as_int(k), k + 1, s + 1);
    const Int v = t.h[k][s];
    if (v >= kInf) continue;
    if (v < out.value) {
      out.value = v;
      best_k.clear();
    }
    if (v == out.value) best_k.push_back(k);
  }
  for (std::size_t k : best_k) {
    Structure acc;
    backtrack(tables_.at(as_int(k)), k, s, s, acc, out.argmin);
  }
  sort_unique(out.argmin);
  return out;
}

Structure parse_children_sizes(std::string_view text) {
  Structure out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("unexpected character '" + std::string(1, c) + "' in children sizes");
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (value > 1'000'000) throw LimitError("child size too large");
      value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
    }
    if (value == 0) throw ParseError("child sizes must be positive");
    out.push_back(value);
  }
  if (out.empty()) throw ParseError("empty children sizes");
  std::sort(out.begin(), out.end());
  return out;
}

BranchShape shape_from_children_sizes(const Structure& sizes, Int n) {
  if (sizes.empty()) return BranchShape::leaf();
  const std::size_t total = 1 + std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  const Int order = n == 0 ? as_int(total) : n;
  if (n != 0 && order < as_int(total) + 1)
    throw DomainError("a branch of size " + std::to_string(total) + " needs a tree of order at least " +
                      std::to_string(total + 1));
  const BranchTable table(order, sizes.back());
  std::vector<BranchShape> children;
  for (auto x : sizes) children.push_back(table.shape(x));
  return BranchShape(std::move(children));
}

BranchTable minimal_branches(Int n, std::size_t max_size, DpOptions options) {
  options.allow_whole_tree = false;
  return BranchTable(n, max_size, options);
}

namespace {

// Child sizes seen from `root`.
Structure rooting_structure(const Graph& g, Vertex root) {
  const RootedTree rt(g, root);
  Structure s;
  for (Vertex c : rt.children(root)) s.push_back(rt.subtree_size(c));
  std::sort(s.begin(), s.end());
  return s;
}

bool representative_less(const Structure& a, const Structure& b) {
  const std::size_t ma = a.empty() ? 0 : a.back();
  const std::size_t mb = b.empty() ? 0 : b.back();
  if (ma != mb) return ma < mb;
  return a < b;
}

} // namespace

OptimalTree minimal_tree(Int n, DpOptions options, std::size_t class_limit) {
  if (n < 2) throw DomainError("minimal tree needs n >= 2");
  options.allow_whole_tree = false;
  const BranchTable table(n, static_cast<std::size_t>(n - 1), options);
  const PartitionResult root = table.tree_root_partitions();

  OptimalTree out;
  out.n = n;
  out.cost = root.value;
  out.root_structures = root.argmin;

  std::map<std::string, Graph> classes;
  std::size_t built = 0;
  for (const auto& st : root.argmin) {
    std::vector<std::vector<BranchShape>> options_per_child;
    for (auto x : st) options_per_child.push_back(table.shapes(x, class_limit));
    std::vector<std::size_t> pick(st.size(), 0);
    for (;;) {
      if (built++ >= class_limit) {
        out.truncated = true;
        break;
      }
      std::vector<BranchShape> children;
      for (std::size_t i = 0; i < st.size(); ++i) children.push_back(options_per_child[i][pick[i]]);
      Graph g = assemble_tree(children).to_graph();
      classes.try_emplace(free_tree_encoding(g), std::move(g));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options_per_child[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    if (out.truncated) break;
  }

  for (auto& [code, g] : classes) {
    const std::size_t top = g.max_degree();
    std::vector<std::pair<Structure, Vertex>> rootings;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == top) rootings.emplace_back(rooting_structure(g, v), v);
    std::sort(rootings.begin(), rootings.end(),
              [](const auto& a, const auto& b) { return representative_less(a.first, b.first); });
    std::vector<Structure> all;
    for (const auto& r : rootings) all.push_back(r.first);
    sort_unique(all);
    out.classes.push_back({code, rootings.front().first, std::move(all), RootedTree(g, rootings.front().second)});
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const auto& a, const auto& b) {
    if (a.representative != b.representative) return a.representative < b.representative;
    return a.canonical < b.canonical;
  });
  return out;
}

std::vector<CostEnvelope> branch_envelopes(std::size_t max_size, DpOptions options) {
  if (max_size < 1) throw DomainError("branch size must be at least 1");
  const Int shift = options.allow_whole_tree ? 0 : 1;
  std::vector<CostEnvelope> env(max_size + 1);
  env[1] = CostEnvelope::single({1, -1}, {}, 1 + shift);

  // cells[c][j][t]: min over j parts summing to t of sum (c x (n-x) + B(x; n)),
  // on [t + 1 + shift, inf).
  std::map<Int, std::vector<std::vector<CostEnvelope>>> cells;
  std::map<Int, std::size_t> filled_columns;
  auto cell = [&](Int c, std::size_t j, std::size_t t) -> const CostEnvelope& {
    auto& grid = cells[c];
    std::size_t& cols = filled_columns[c];
    auto compute = [&](std::size_t jj, std::size_t tt) {
      const Int start = as_int(tt) + 1 + shift;
      if (jj == 0) {
        if (tt == 0) grid[jj][tt] = CostEnvelope::single({0, 0}, {}, start);
        return;
      }
      std::vector<CostEnvelope::TaggedLine> lines;
      for (std::size_t x = 1; x + (jj - 1) <= tt; ++x) {
        const CostEnvelope& prev = grid[jj - 1][tt - x];
        if (prev.empty()) continue;
        const Int xi = as_int(x);
        const AffineCost spread{checked_mul(c, xi), -checked_mul(c, checked_mul(xi, xi))};
        prev.plus(env[x], x).restricted(start).plus(spread).collect(lines);
      }
      grid[jj][tt] = CostEnvelope::lower_envelope(std::move(lines), start);
    };
    while (grid.size() <= j) {
      grid.emplace_back(cols);
      for (std::size_t tt = 0; tt < cols; ++tt) compute(grid.size() - 1, tt);
    }
    if (cols <= t) {
      for (auto& row : grid) row.resize(t + 1);
      for (std::size_t tt = cols; tt <= t; ++tt)
        for (std::size_t jj = 0; jj < grid.size(); ++jj) compute(jj, tt);
      cols = t + 1;
    }
    return grid[j][t];
  };

  for (std::size_t m = 2; m <= max_size; ++m) {
    const std::size_t s = m - 1;
    const Int mi = as_int(m);
    const Int start = mi + shift;
    std::size_t k_max = s;
    if (options.max_children) k_max = std::min(k_max, *options.max_children);
    std::vector<CostEnvelope::TaggedLine> lines;
    CostEnvelope current;
    for (std::size_t k = 1; k <= k_max; ++k) {
      const Int ki = as_int(k);
      const Int si = as_int(s);
      const AffineCost bound{checked_add(checked_mul(ki + 1, mi + si), ki),
                             checked_sub(checked_mul(ki + 1, -checked_add(checked_add(checked_mul(mi, mi),
                                                                                      max_square_sum(si, ki)),
                                                                          ki - 1)),
                                         ki)};
      if (!current.empty() && current.under_line(bound)) break;
      const CostEnvelope& g = cell(ki + 1, k, s);
      if (g.empty()) continue;
      g.restricted(start).plus(AffineCost{checked_mul(ki + 1, mi), -checked_mul(ki + 1, checked_mul(mi, mi))})
          .collect(lines);
      current = CostEnvelope::lower_envelope(lines, start);
    }
    env[m] = std::move(current);
  }
  return env;
}

ThresholdTable threshold_table(std::size_t max_size, Int n_max, ScanOptions options) {
  if (max_size < 2) throw DomainError("threshold table needs sizes >= 2");
  if (n_max < as_int(max_size)) throw DomainError("scan must reach the largest size");
  DpOptions dp = options.dp;
  dp.allow_whole_tree = true;

  // optimal[n][m]: co-optimal structures of size m at order n.
  std::vector<std::vector<std::vector<Structure>>> optimal(static_cast<std::size_t>(n_max) + 1);
  parallel_for(2, n_max, options.jobs, [&](Int n) {
    const std::size_t cap = std::min<std::size_t>(max_size, static_cast<std::size_t>(n));
    const BranchTable t(n, cap, dp);
    auto& row = optimal[static_cast<std::size_t>(n)];
    row.resize(cap + 1);
    for (std::size_t m = 1; m <= cap; ++m) row[m] = t.structures(m);
  });

  const auto envelopes = branch_envelopes(max_size, dp);
  ThresholdTable out;
  out.max_size = max_size;
  out.n_max = n_max;
  for (std::size_t m = 2; m <= max_size; ++m) {
    const CostEnvelope& env = envelopes[m];
    const Rational last = env.pieces().back().start;
    if (last > Rational(n_max))
      out.warnings.push_back("size " + std::to_string(m) + ": envelope changes at n = " + last.to_string() +
                             ", beyond the scanned range");
    bool first = true;
    for (const auto& st : optimal[static_cast<std::size_t>(n_max)][m]) {
      ThresholdRow row;
      row.size = m;
      row.children = st;
      row.starred = !first;
      row.last_breakpoint = last;
      first = false;
      Int lo = n_max;
      auto holds = [&](Int n) {
        const auto& v = optimal[static_cast<std::size_t>(n)][m];
        return std::binary_search(v.begin(), v.end(), st);
      };
      while (lo - 1 >= as_int(m) && holds(lo - 1)) --lo;
      row.threshold = lo;

      const auto& pieces = env.pieces();
      auto tagged = [&](std::size_t i) { return std::binary_search(pieces[i].argmin.begin(), pieces[i].argmin.end(), st); };
      if (tagged(pieces.size() - 1)) {
        std::size_t i = pieces.size() - 1;
        while (i > 0 && tagged(i - 1)) --i;
        row.envelope_threshold = std::max(as_int(m), pieces[i].start.ceil());
        row.certified = pieces[i].start <= Rational(n_max);
      }
      if (!row.certified)
        out.warnings.push_back("size " + std::to_string(m) + ": structure not certified stable beyond n_max");
      else if (row.envelope_threshold != row.threshold)
        out.warnings.push_back("size " + std::to_string(m) + ": scan threshold " + std::to_string(row.threshold) +
                               " differs from envelope threshold " + std::to_string(*row.envelope_threshold));
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

CrossingReport compare_structures(const BranchShape& a, const BranchShape& b) {
  if (a.size() != b.size()) throw DomainError("compared branches must have equal sizes");
  CrossingReport r;
  r.cost_a = branch_cost(a);
  r.cost_b = branch_cost(b);
  r.difference = r.cost_a - r.cost_b;
  r.domain_start = as_int(a.size()) + 1;
  const Int at_start = r.difference.at(r.domain_start);
  r.sign_at_start = (at_start > 0) - (at_start < 0);
  if (r.difference.slope != 0) {
    const Rational root(-r.difference.intercept, r.difference.slope);
    if (root >= Rational(r.domain_start)) r.crossing = root;
    r.sign_at_infinity = r.difference.slope > 0 ? 1 : -1;
  } else {
    r.sign_at_infinity = (r.difference.intercept > 0) - (r.difference.intercept < 0);
  }
  return r;
}

Order326Report regular_vs_optimal_326(Int n_lo, Int n_hi, Int step, ScanOptions options) {
  if (n_lo < 328) throw DomainError("order-326 comparison needs n >= 328");
  if (n_hi < n_lo || step < 1) throw DomainError("empty scan range");
  const Structure candidate{103, 103, 119};
  const Structure regular(5, 65);
  const AffineCost regular_shape = branch_cost(regular_branch({5, 4, 3, 2, 1}));

  std::vector<Int> ns;
  for (Int n = n_lo; n <= n_hi; n += step) ns.push_back(n);
  Order326Report out;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  out.rows.resize(ns.size());
  DpOptions dp = options.dp;
  dp.allow_whole_tree = false;
  parallel_for(0, as_int(ns.size()) - 1, options.jobs, [&](Int i) {
    const Int n = ns[static_cast<std::size_t>(i)];
    const BranchTable t(n, 326, dp);
    Order326Row& row = out.rows[static_cast<std::size_t>(i)];
    row.n = n;
    row.candidate_cost = t.structure_cost(candidate);
    row.regular_cost = t.structure_cost(regular);
    row.regular_shape_cost = regular_shape.at(n);
    row.optimum_cost = t.cost(326);
    row.optimum = t.structures(326);
    row.optimum_regular = std::any_of(row.optimum.begin(), row.optimum.end(), all_equal);
  });
  for (const auto& row : out.rows)
    if (row.regular_cost <= row.candidate_cost) out.last_regular_win = row.n;
  if (!out.rows.empty() && out.rows.back().candidate_cost < out.rows.back().regular_cost) {
    out.tail_start = out.last_regular_win ? *out.last_regular_win + step : n_lo;
  }
  return out;
}

} // namespace wsz
