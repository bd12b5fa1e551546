#include <gtest/gtest.h>

#include "setval/error.hpp"
#include "setval/set_label.hpp"

namespace setval {
namespace {

std::vector<SetLabel> power_set(std::size_t m) {
  const GroundSet ground(m);
  std::vector<SetLabel> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) out.push_back(SetLabel::from_mask(ground, mask));
  return out;
}

TEST(SetLabel, CanonicalElements) {
  const GroundSet x(5);
  const SetLabel s = SetLabel::from_elements(x, {4, 2, 2, 5});
  EXPECT_EQ(s.elements(), (std::vector<Element>{2, 4, 5}));
  EXPECT_EQ(s.cardinality(), 3u);
  EXPECT_TRUE(s.is_odd());
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(1));
}

TEST(SetLabel, RejectsElementsOutsideGround) {
  const GroundSet x(3);
  EXPECT_THROW(SetLabel::from_elements(x, {0}), Error);
  EXPECT_THROW(SetLabel::from_elements(x, {4}), Error);
  EXPECT_THROW(SetLabel::from_mask(x, 0b1000), Error);
  EXPECT_THROW(GroundSet(0), Error);
}

TEST(SetLabel, WideGroundSets) {
  const GroundSet x(130);
  const SetLabel a = SetLabel::from_elements(x, {1, 64, 65, 130});
  const SetLabel b = SetLabel::from_elements(x, {64, 129});
  EXPECT_EQ(symmetric_difference(a, b).elements(), (std::vector<Element>{1, 65, 129, 130}));
  EXPECT_EQ(induced_sign(a, b), Sign::positive);
}

TEST(SymmetricDifference, Examples) {
  const GroundSet x(3);
  auto s = [&](std::initializer_list<Element> e) { return SetLabel::from_elements(x, e); };
  EXPECT_EQ(symmetric_difference(s({1, 2}), s({2, 3})), s({1, 3}));
  EXPECT_TRUE(symmetric_difference(s({1, 3}), s({1, 3})).empty());
  EXPECT_EQ(symmetric_difference(s({1}), s({2})), s({1, 2}));
}

TEST(SymmetricDifference, GroundSetMismatch) {
  const SetLabel a(GroundSet(2));
  const SetLabel b(GroundSet(3));
  try {
    symmetric_difference(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroundSetMismatch);
  }
  EXPECT_THROW(induced_sign(a, b), Error);
}

TEST(SymmetricDifference, GroupLawsExhaustive) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto all = power_set(m);
    const SetLabel empty(GroundSet{m});
    for (const auto& a : all) {
      EXPECT_EQ(symmetric_difference(a, empty), a);
      EXPECT_TRUE(symmetric_difference(a, a).empty());
      for (const auto& b : all) {
        EXPECT_EQ(symmetric_difference(a, b), symmetric_difference(b, a));
        for (const auto& c : all) {
          ASSERT_EQ(symmetric_difference(symmetric_difference(a, b), c),
                    symmetric_difference(a, symmetric_difference(b, c)));
        }
      }
    }
  }
}

TEST(SymmetricDifference, MatchesSetDefinition) {
  const auto all = power_set(4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const SetLabel d = symmetric_difference(a, b);
      for (Element e = 1; e <= 4; ++e) ASSERT_EQ(d.contains(e), a.contains(e) != b.contains(e));
    }
  }
}

TEST(InducedSign, Examples) {
  const GroundSet x(3);
  auto s = [&](std::initializer_list<Element> e) { return SetLabel::from_elements(x, e); };
  EXPECT_EQ(induced_sign(s({1}), s({2})), Sign::positive);
  EXPECT_EQ(induced_sign(s({1}), s({1, 2})), Sign::negative);
  EXPECT_EQ(induced_sign(s({1, 2, 3}), s({3})), Sign::positive);
  EXPECT_EQ(induced_sign(s({2}), s({2})), Sign::positive);
}

TEST(SameParity, Examples) {
  const GroundSet x(3);
  auto s = [&](std::initializer_list<Element> e) { return SetLabel::from_elements(x, e); };
  EXPECT_TRUE(same_parity(s({1, 2}), s({})));
  EXPECT_FALSE(same_parity(s({1}), s({2, 3})));
  EXPECT_TRUE(same_parity(s({1}), s({2})));
}

// |a ⊕ b| ≡ |a| + |b| (mod 2), and the sign rule read both ways.
TEST(ParityLemma, ExhaustiveUpToFive) {
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto all = power_set(m);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const std::size_t d = symmetric_difference(a, b).cardinality();
        ASSERT_EQ(d % 2, (a.cardinality() + b.cardinality()) % 2);
        ASSERT_EQ(induced_sign(a, b) == Sign::positive, same_parity(a, b));
      }
    }
  }
}

TEST(SetLabel, OrderingAndHashAgreeWithEquality) {
  const auto all = power_set(3);
  SetLabelHash hash;
  for (const auto& a : all) {
    for (const auto& b : all) {
      EXPECT_EQ(a == b, (a <=> b) == 0);
      if (a == b) {
        EXPECT_EQ(hash(a), hash(b));
      }
    }
  }
}

}  // namespace
}  // namespace setval
