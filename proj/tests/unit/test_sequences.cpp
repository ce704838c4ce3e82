#include <gtest/gtest.h>

#include "apolar/sequences.hpp"

namespace apolar {
namespace {

TEST(Sequences, ConjugateOfSortedHVector) {
  const HVector h{{1, 4, 7, 7, 4, 1}};
  EXPECT_EQ(h.to_string(), "(1,4,7,7,4,1)");
  EXPECT_EQ(h.total(), 24);
  EXPECT_TRUE(h.is_symmetric());
  const Partition p(h.values);
  EXPECT_EQ(p.to_string(), "(7,7,4,4,1,1)");
  EXPECT_EQ(conjugate_partition(p), Partition({6, 4, 4, 4, 2, 2, 2}));
}

TEST(Sequences, ConjugateIsAnInvolution) {
  EXPECT_EQ(conjugate_partition(Partition({6})), Partition({1, 1, 1, 1, 1, 1}));
  for (const auto& parts : std::vector<std::vector<long>>{{5}, {3, 3, 1}, {4, 2, 2, 1}, {}}) {
    const Partition p(parts);
    EXPECT_EQ(conjugate_partition(conjugate_partition(p)), p);
    EXPECT_EQ(conjugate_partition(p).sum(), p.sum());
  }
}

TEST(Sequences, PartitionDropsZerosAndSorts) {
  EXPECT_EQ(Partition({0, 2, 5, 0, 1}).parts(), (std::vector<long>{5, 2, 1}));
}

TEST(Sequences, ParseHVector) {
  EXPECT_EQ(parse_hvector("1,4,7,7,4,1"), (HVector{{1, 4, 7, 7, 4, 1}}));
  EXPECT_EQ(parse_hvector("(1, 3, 3, 1)"), (HVector{{1, 3, 3, 1}}));
  EXPECT_ANY_THROW(parse_hvector("1,a"));
  EXPECT_FALSE((HVector{{1, 2, 1, 0}}).is_symmetric());
}

}  // namespace
}  // namespace apolar
