#include <gtest/gtest.h>

#include "wszeged/optimizer.hpp"

namespace {

using wsz::AffineCost;
using wsz::CostEnvelope;
using wsz::Rational;
using wsz::Structure;

TEST(Rational, LowestTermsAndOrdering) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.floor(), -2);
  EXPECT_EQ(r.ceil(), -1);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(4, 2), Rational(2));
  EXPECT_THROW(Rational(1, 0), wsz::DomainError);
}

TEST(Intersection, ExactBreakpoints) {
  EXPECT_EQ(wsz::intersection({29, -75}, {31, -87}), Rational(6));
  EXPECT_EQ(wsz::intersection({1, 0}, {3, -1}), Rational(1, 2));
}

TEST(LowerEnvelope, KeepsMinimumAndMergesTags) {
  std::vector<CostEnvelope::TaggedLine> lines{
      {{31, -87}, {{3}}}, {{29, -75}, {{1, 2}}}, {{31, -79}, {{1, 1, 1}}}};
  const auto env = CostEnvelope::lower_envelope(lines, 5);
  ASSERT_EQ(env.pieces().size(), 2u);
  EXPECT_EQ(env.pieces()[0].line, (AffineCost{31, -87}));
  EXPECT_EQ(env.pieces()[1].start, Rational(6));
  EXPECT_EQ(env.pieces()[1].line, (AffineCost{29, -75}));
  EXPECT_EQ(env.at(5), 68);
  EXPECT_EQ(env.argmin_at(6), (std::vector<Structure>{{1, 2}, {3}}));
  EXPECT_EQ(env.argmin_at(7), (std::vector<Structure>{{1, 2}}));
  EXPECT_TRUE(env.under_line({31, -70}));
  EXPECT_FALSE(env.under_line({29, -75}));
  EXPECT_THROW(env.at(4), wsz::DomainError);
}

TEST(BranchEnvelopes, SmallSizes) {
  const auto env = wsz::branch_envelopes(5);
  ASSERT_EQ(env[1].pieces().size(), 1u);
  EXPECT_EQ(env[1].pieces()[0].line, (AffineCost{1, -1}));
  EXPECT_EQ(env[2].pieces().back().line, (AffineCost{7, -11}));
  // size 4: the chain below n = 6, (1,2) from n = 6 on
  ASSERT_EQ(env[4].pieces().size(), 2u);
  EXPECT_EQ(env[4].pieces()[0].line, (AffineCost{31, -87}));
  EXPECT_EQ(env[4].pieces()[1].start, Rational(6));
  EXPECT_EQ(env[4].pieces()[1].line, (AffineCost{29, -75}));
  EXPECT_EQ(env[4].pieces()[1].argmin, (std::vector<Structure>{{1, 2}}));
  // size 5: settles on (2,2), 41n - 121, from n = 6 on
  const auto& last = env[5].pieces().back();
  EXPECT_EQ(last.line, (AffineCost{41, -121}));
  EXPECT_EQ(last.argmin, (std::vector<Structure>{{2, 2}}));
  EXPECT_LE(last.start, Rational(6));
  EXPECT_EQ(env[5].argmin_at(6), (std::vector<Structure>{{2, 2}}));
}

TEST(BranchEnvelopes, AgreeWithFixedOrderDp) {
  const std::size_t max_size = 30;
  const auto env = wsz::branch_envelopes(max_size);
  for (wsz::Int n = 2; n <= 300; ++n) {
    const std::size_t top = std::min<std::size_t>(max_size, static_cast<std::size_t>(n - 1));
    const wsz::BranchTable table(n, top);
    for (std::size_t m = 1; m <= top; ++m) {
      ASSERT_EQ(env[m].at(n), table.cost(m)) << "m=" << m << " n=" << n;
      for (const auto& s : env[m].argmin_at(n)) ASSERT_TRUE(table.is_optimal(m, s)) << "m=" << m << " n=" << n;
    }
  }
}

TEST(CompareStructures, Examples) {
  const auto r = wsz::compare_structures(wsz::parse_branch("((())())"), wsz::BranchShape::chain(4));
  EXPECT_EQ(r.difference, (AffineCost{-2, 12}));
  ASSERT_TRUE(r.crossing.has_value());
  EXPECT_EQ(*r.crossing, Rational(6));
  EXPECT_EQ(r.sign_at_infinity, -1);

  const auto gap = wsz::compare_structures(wsz::BranchShape::chain(4), wsz::parse_branch("(()()())"));
  EXPECT_EQ(gap.difference, (AffineCost{0, -8}));
  EXPECT_FALSE(gap.crossing.has_value());
  EXPECT_EQ(gap.sign_at_start, -1);
  EXPECT_EQ(gap.sign_at_infinity, -1);

  const auto same = wsz::compare_structures(wsz::BranchShape::chain(3), wsz::BranchShape::chain(3));
  EXPECT_EQ(same.difference, (AffineCost{0, 0}));
  EXPECT_FALSE(same.crossing.has_value());
  EXPECT_EQ(same.sign_at_infinity, 0);

  EXPECT_THROW(wsz::compare_structures(wsz::BranchShape::chain(3), wsz::BranchShape::chain(4)), wsz::DomainError);
}

} // namespace
