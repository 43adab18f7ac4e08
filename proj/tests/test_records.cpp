#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "wszeged/records.hpp"

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("wsz-records-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::remove(dir / name);
  return dir / name;
}

TEST(ResultRecord, TreeRecordRoundTrip) {
  const auto r = wsz::tree_record(wsz::minimal_tree(18));
  EXPECT_EQ(r.mode, "tree");
  EXPECT_EQ(r.cost, "2874");
  EXPECT_EQ(r.children_sizes, (wsz::Structure{2, 5, 5, 5}));
  ASSERT_EQ(r.ties.size(), 1u);
  EXPECT_EQ(r.ties[0].children_sizes, (wsz::Structure{3, 4, 5, 5}));
  EXPECT_EQ(r.root_degree(), 4u);
  const auto j = wsz::to_json(r);
  EXPECT_EQ(j.at("cost").get<std::string>(), "2874");
  EXPECT_EQ(wsz::record_from_json(j), r);
  EXPECT_EQ(wsz::parse_branch(r.shape).children_sizes(), r.children_sizes);
}

TEST(ResultRecord, BranchRecordReportsDegreeAndTies) {
  const auto table = wsz::minimal_branches(14, 10);
  const auto r = wsz::branch_record(table, 10);
  EXPECT_EQ(r.mode, "branch");
  EXPECT_EQ(r.n, 14);
  EXPECT_EQ(r.root_degree(), r.child_count + 1);
  EXPECT_EQ(r.ties.size() + 1, table.structures(10).size());
  EXPECT_EQ(std::to_string(table.cost(10)), r.cost);
  EXPECT_EQ(wsz::record_from_json(wsz::to_json(r)), r);
}

TEST(ResultRecord, RejectsSchemaViolations) {
  auto j = wsz::to_json(wsz::tree_record(wsz::minimal_tree(7)));
  auto bad_version = j;
  bad_version["schemaVersion"] = 99;
  EXPECT_THROW(wsz::record_from_json(bad_version), wsz::ParseError);
  auto bad_cost = j;
  bad_cost["cost"] = "12x";
  EXPECT_THROW(wsz::record_from_json(bad_cost), wsz::ParseError);
  auto bad_shape = j;
  bad_shape["childrenSizes"] = {1, 2};
  bad_shape["childCount"] = 2;
  EXPECT_THROW(wsz::record_from_json(bad_shape), wsz::ParseError);
  auto missing = j;
  missing.erase("mode");
  EXPECT_THROW(wsz::record_from_json(missing), wsz::ParseError);
}

TEST(ThresholdJson, RoundTripIsExact) {
  const auto t = wsz::threshold_table(15, 150);
  const auto j = wsz::to_json(t);
  const auto back = wsz::threshold_table_from_json(j);
  EXPECT_EQ(wsz::to_json(back).dump(), j.dump());
  EXPECT_EQ(wsz::format_threshold_table(back), wsz::format_threshold_table(t));
}

TEST(TextTables, TextAndJsonAgree) {
  const auto t = wsz::threshold_table(12, 100);
  const auto text = wsz::format_threshold_table(t);
  EXPECT_NE(text.find("   10 |    14 |        3 |      4 | 3, 3, 3"), std::string::npos);
  EXPECT_NE(text.find("  10* |    14 |        2 |      3 | 4, 5"), std::string::npos);
  std::vector<wsz::ResultRecord> rows;
  for (wsz::Int n = 2; n <= 20; ++n) rows.push_back(wsz::tree_record(wsz::minimal_tree(n)));
  const auto tree_text = wsz::format_tree_table(rows);
  EXPECT_NE(tree_text.find("  18* |      4 |       2874 | 3, 4, 5, 5"), std::string::npos);
  EXPECT_EQ(wsz::tree_table_from_json(wsz::tree_table_document(rows)), rows);
}

TEST(Dot, CountsMatchTree) {
  const auto tree = wsz::minimal_tree(67).classes.front().tree;
  const auto dot = wsz::to_dot(tree, "n67");
  std::size_t edges = 0;
  std::size_t nodes = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (line.find(" -- ") != std::string::npos)
      ++edges;
    else if (line.find("[label=") != std::string::npos)
      ++nodes;
  }
  EXPECT_EQ(nodes, 67u);
  EXPECT_EQ(edges, 66u);
}

TEST(Cache, ColdStoreLoad) {
  const auto path = temp_file("cache.json");
  {
    wsz::ResultCache cold(path);
    EXPECT_TRUE(cold.notices().empty());
    EXPECT_FALSE(cold.get("k").has_value());
    cold.put("k", wsz::Json{{"x", 1}});
  }
  wsz::ResultCache warm(path);
  ASSERT_TRUE(warm.get("k").has_value());
  EXPECT_EQ(warm.get("k")->at("x").get<int>(), 1);
}

TEST(Cache, CorruptAndOutdatedFilesAreIgnoredWithNotice) {
  const auto path = temp_file("corrupt.json");
  std::ofstream(path) << "{not json";
  wsz::ResultCache corrupt(path);
  EXPECT_EQ(corrupt.notices().size(), 1u);
  EXPECT_FALSE(corrupt.get("k").has_value());
  corrupt.put("k", 1);
  EXPECT_TRUE(wsz::ResultCache(path).get("k").has_value());

  std::ofstream(path, std::ios::trunc) << R"({"format":"wszeged-cache","schemaVersion":0,"entries":{"k":1}})";
  wsz::ResultCache old(path);
  EXPECT_EQ(old.notices().size(), 1u);
  EXPECT_FALSE(old.get("k").has_value());
}

TEST(Cache, DisabledAndEnvironmentDefault) {
  wsz::ResultCache off;
  EXPECT_FALSE(off.enabled());
  off.put("k", 1);
  EXPECT_FALSE(off.get("k").has_value());
  ::setenv("WSZ_CACHE_DIR", "/tmp/wsz-env-cache", 1);
  EXPECT_EQ(wsz::ResultCache::default_path(), fs::path("/tmp/wsz-env-cache/wszeged-cache.json"));
  ::unsetenv("WSZ_CACHE_DIR");
  EXPECT_FALSE(wsz::ResultCache::default_path().has_value());
}

} // namespace
