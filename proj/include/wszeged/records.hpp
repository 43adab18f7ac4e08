#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "wszeged/conjectures.hpp"
#include "wszeged/optimizer.hpp"

namespace wsz {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

struct TieEntry {
  Structure children_sizes;
  std::string shape;
  std::vector<Structure> rootings; // trees: every maximum-degree rooting of this class
  friend bool operator==(const TieEntry&, const TieEntry&) = default;
};

// One optimal tree or minimal branch, ready for text, JSON and DOT output.
struct ResultRecord {
  int schema_version = kSchemaVersion;
  std::string mode; // "tree" | "branch"
  Int n = 0;
  std::size_t size = 0;
  std::string cost; // exact decimal
  std::size_t child_count = 0;
  Structure children_sizes; // ascending
  std::string shape;        // parenthesis notation of the whole tree / branch
  std::vector<Structure> rootings; // trees: every maximum-degree rooting of this class
  std::vector<TieEntry> ties;       // further co-optimal classes / structures
  // Every children multiset at which the root recursion attains the optimum,
  // whatever the degree of the root vertex.
  std::vector<Structure> root_structures;
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;

  // Degree of the root vertex: child count for a tree root, child count + 1
  // for a branch root (the half-edge toward the host tree).
  std::size_t root_degree() const { return mode == "branch" ? child_count + 1 : child_count; }
};

ResultRecord tree_record(const OptimalTree& tree);
ResultRecord branch_record(const BranchTable& table, std::size_t m);

Json to_json(const ResultRecord& r);
ResultRecord record_from_json(const Json& j); // throws ParseError on schema violations
Json to_json(const ThresholdTable& t);
ThresholdTable threshold_table_from_json(const Json& j);
Json to_json(const ConjectureReport& r);
Json conjecture_document(const std::vector<ConjectureReport>& reports);
Json tree_table_document(const std::vector<ResultRecord>& rows);
std::vector<ResultRecord> tree_table_from_json(const Json& j);

// Plain text tables. Columns follow "n_v | n >= | children count | degree |
// children" for branches and "n | degree | children" for trees; tie rows carry
// a '*' after the order.
std::string format_threshold_table(const ThresholdTable& t);
std::string format_tree_table(const std::vector<ResultRecord>& rows);
std::string format_record(const ResultRecord& r);
std::string format_conjectures(const std::vector<ConjectureReport>& reports);

// Graphviz drawing of a rooted tree; vertex labels are degrees.
std::string to_dot(const RootedTree& tree, const std::string& name);

// Versioned JSON cache keyed by request. A missing, corrupt or outdated file
// is ignored (with a notice) so callers fall back to a cold computation.
class ResultCache {
public:
  ResultCache() = default; // disabled
  explicit ResultCache(std::filesystem::path path);

  // $WSZ_CACHE_DIR/wszeged-cache.json when the variable is set.
  static std::optional<std::filesystem::path> default_path();

  bool enabled() const noexcept { return !path_.empty(); }
  const std::filesystem::path& path() const noexcept { return path_; }
  std::optional<Json> get(const std::string& key) const;
  void put(const std::string& key, Json value); // writes through
  const std::vector<std::string>& notices() const noexcept { return notices_; }

private:
  std::filesystem::path path_;
  Json entries_ = Json::object();
  std::vector<std::string> notices_;
};

} // namespace wsz
