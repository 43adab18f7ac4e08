#include <gtest/gtest.h>

#include <string>

#include "wszeged/wszeged.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  wsz_string_free(s);
  return out;
}

TEST(CApi, GraphIndices) {
  wsz_graph* g = nullptr;
  ASSERT_EQ(wsz_graph_parse_edge_list("0 1\n1 2\n2 3\n", &g), WSZ_OK);
  int64_t value = 0;
  ASSERT_EQ(wsz_graph_weighted_szeged(g, &value), WSZ_OK);
  EXPECT_EQ(value, 34);
  ASSERT_EQ(wsz_graph_szeged(g, &value), WSZ_OK);
  EXPECT_EQ(value, 10);
  size_t nu = 0;
  size_t nv = 0;
  ASSERT_EQ(wsz_graph_edge_split(g, 0, 1, &nu, &nv), WSZ_OK);
  EXPECT_EQ(nu, 1u);
  EXPECT_EQ(nv, 3u);
  EXPECT_EQ(wsz_graph_edge_split(g, 0, 3, &nu, &nv), WSZ_ERR_VALIDATION);
  char* text = nullptr;
  ASSERT_EQ(wsz_graph_index_string(g, "sz", &text), WSZ_OK);
  EXPECT_EQ(take(text), "10");
  EXPECT_EQ(wsz_graph_index_string(g, "nope", &text), WSZ_ERR_INVALID_ARGUMENT);
  wsz_graph_free(g);
}

TEST(CApi, FromEdgesAndCycle) {
  const size_t pairs[] = {0, 1, 1, 2, 2, 3, 3, 0};
  wsz_graph* g = nullptr;
  ASSERT_EQ(wsz_graph_from_edges(4, pairs, 4, &g), WSZ_OK);
  int64_t value = 0;
  ASSERT_EQ(wsz_graph_szeged(g, &value), WSZ_OK);
  EXPECT_EQ(value, 16);
  size_t count = 0;
  ASSERT_EQ(wsz_graph_edge_count(g, &count), WSZ_OK);
  EXPECT_EQ(count, 4u);
  wsz_graph_free(g);
}

TEST(CApi, ErrorCodesAndMessages) {
  wsz_graph* g = nullptr;
  EXPECT_EQ(wsz_graph_parse_edge_list("0 1\n0 1\n", &g), WSZ_ERR_VALIDATION);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(wsz_last_error()).find("duplicate"), std::string::npos);
  EXPECT_EQ(wsz_graph_parse_edge_list("0 1 2\n", &g), WSZ_ERR_PARSE);
  EXPECT_EQ(wsz_graph_parse_edge_list(nullptr, &g), WSZ_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(wsz_graph_weighted_szeged(nullptr, nullptr), WSZ_ERR_INVALID_ARGUMENT);
  wsz_branch* b = nullptr;
  EXPECT_EQ(wsz_branch_parse("(()", &b), WSZ_ERR_PARSE);
  EXPECT_EQ(wsz_optimal_tree(1, nullptr, nullptr, nullptr), WSZ_ERR_DOMAIN);
  EXPECT_EQ(wsz_verify(30, 5, nullptr, nullptr, nullptr), WSZ_ERR_INVALID_ARGUMENT);
  int passed = 0;
  EXPECT_EQ(wsz_verify(30, 5, &passed, nullptr, nullptr), WSZ_ERR_LIMIT);
  EXPECT_STREQ(wsz_status_name(WSZ_OK), "ok");
  // success clears the message
  ASSERT_EQ(wsz_graph_parse_edge_list("0 1\n", &g), WSZ_OK);
  EXPECT_STREQ(wsz_last_error(), "");
  wsz_graph_free(g);
  wsz_graph_free(nullptr);
  wsz_branch_free(nullptr);
  wsz_branch_table_free(nullptr);
}

TEST(CApi, BranchCosts) {
  wsz_branch* b = nullptr;
  ASSERT_EQ(wsz_branch_parse("( (()) () )", &b), WSZ_OK);
  int64_t slope = 0;
  int64_t intercept = 0;
  ASSERT_EQ(wsz_branch_cost(b, &slope, &intercept), WSZ_OK);
  EXPECT_EQ(slope, 29);
  EXPECT_EQ(intercept, -75);
  int64_t at = 0;
  ASSERT_EQ(wsz_branch_cost_at(b, 10, &at), WSZ_OK);
  EXPECT_EQ(at, 215);
  EXPECT_EQ(wsz_branch_cost_at(b, 4, &at), WSZ_ERR_DOMAIN);
  char* text = nullptr;
  ASSERT_EQ(wsz_branch_print(b, &text), WSZ_OK);
  EXPECT_EQ(take(text), "((())())");
  wsz_graph* g = nullptr;
  ASSERT_EQ(wsz_branch_to_graph(b, 6, &g), WSZ_OK);
  size_t n = 0;
  ASSERT_EQ(wsz_graph_vertex_count(g, &n), WSZ_OK);
  EXPECT_EQ(n, 10u);
  wsz_graph_free(g);
  wsz_branch_free(b);

  ASSERT_EQ(wsz_branch_from_sizes("16,16,16,18", 0, &b), WSZ_OK);
  ASSERT_EQ(wsz_branch_to_graph(b, 0, &g), WSZ_OK);
  ASSERT_EQ(wsz_graph_weighted_szeged(g, &at), WSZ_OK);
  EXPECT_EQ(at, 75460);
  wsz_graph_free(g);
  wsz_branch_free(b);
}

TEST(CApi, BranchTableAndRecords) {
  wsz_branch_table* t = nullptr;
  ASSERT_EQ(wsz_branch_table_new(67, 16, &t), WSZ_OK);
  int64_t cost = 0;
  ASSERT_EQ(wsz_branch_table_cost(t, 1, &cost), WSZ_OK);
  EXPECT_EQ(cost, 66);
  char* json = nullptr;
  char* text = nullptr;
  ASSERT_EQ(wsz_branch_table_record(t, 16, &json, &text), WSZ_OK);
  EXPECT_NE(take(json).find("\"childrenSizes\": [\n    5,\n    5,\n    5\n  ]"), std::string::npos);
  EXPECT_NE(take(text).find("children:    5, 5, 5"), std::string::npos);
  EXPECT_EQ(wsz_branch_table_record(t, 17, &json, &text), WSZ_ERR_DOMAIN);
  wsz_branch_table_free(t);
  EXPECT_EQ(wsz_branch_table_new(10, 10, &t), WSZ_ERR_DOMAIN);
}

TEST(CApi, OptimalTreeWithDot) {
  char* json = nullptr;
  char* text = nullptr;
  char* dot = nullptr;
  ASSERT_EQ(wsz_optimal_tree(67, &json, &text, &dot), WSZ_OK);
  EXPECT_NE(take(json).find("\"cost\": \"75460\""), std::string::npos);
  EXPECT_NE(take(text).find("16, 16, 16, 18"), std::string::npos);
  EXPECT_NE(take(dot).find("graph \"Best weighted Szeged index on 67 vertices\""), std::string::npos);
}

TEST(CApi, TablesWithoutCache) {
  const wsz_run_options options{"", 1};
  char* json = nullptr;
  char* text = nullptr;
  ASSERT_EQ(wsz_threshold_table(22, 200, &options, &json, &text), WSZ_OK);
  EXPECT_NE(take(json).find("\"mode\": \"threshold\""), std::string::npos);
  EXPECT_NE(take(text).find("   22 |    45 |        3 |      4 | 7, 7, 7"), std::string::npos);
  ASSERT_EQ(wsz_tree_table(20, &options, &json, &text), WSZ_OK);
  take(json);
  EXPECT_NE(take(text).find("  15* |      3 |       1780 | 4, 5, 5"), std::string::npos);
  EXPECT_EQ(wsz_tree_table(1, &options, &json, &text), WSZ_ERR_DOMAIN);
}

TEST(CApi, KaryEstimate) {
  double v = 0;
  ASSERT_EQ(wsz_kary_estimate(1e6, 4, &v), WSZ_OK);
  EXPECT_GT(v, 0.0);
  EXPECT_EQ(wsz_kary_estimate(1e6, 1, &v), WSZ_ERR_DOMAIN);
}

} // namespace
