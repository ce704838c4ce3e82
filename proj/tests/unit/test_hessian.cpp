#include <gtest/gtest.h>

#include "apolar/error.hpp"
#include "apolar/hessian.hpp"
#include "corpus.hpp"

namespace apolar {
namespace {

using testing::dual;

const std::vector<Rational> kOnes{1, 1, 1, 1};

TEST(Hessian, UsualHessianEntries) {
  const ArtinAlgebra A(dual("X1*X2*X3*X4^2", 4));
  const HessianMatrix H = hessian_matrix(A, 1);
  ASSERT_EQ(H.size(), 4u);
  EXPECT_TRUE(H.is_symmetric());
  EXPECT_EQ(H.at(0, 3), dual("2*X2*X3*X4", 4).form());
  EXPECT_EQ(H.at(3, 3), dual("2*X1*X2*X3", 4).form());
  EXPECT_TRUE(H.at(0, 0).is_zero());

  const HessianMatrix one = hessian_matrix(dual("X1^5", 1), 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.at(0, 0), dual("20*X1^3", 1).form());
}

TEST(Hessian, OrderOneIsTheMatrixOfSecondPartials) {
  for (const auto& entry : testing::global_corpus()) {
    if (entry.F.socle_degree() < 2) continue;
    const HessianMatrix H = hessian_matrix(entry.F, 1);
    const int n = entry.F.nvars();
    ASSERT_EQ(H.size(), static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        const Poly d2 = diff_action(
            Poly::monomial(Alphabet::Operator, Monomial::variable(n, u) * Monomial::variable(n, v)),
            entry.F.form());
        EXPECT_EQ(H.at(u, v), d2) << entry.name;
      }
    }
  }
}

TEST(Hessian, UsualAndLefschetzConventionsAgreeOffCones) {
  for (const auto& entry : testing::gordan_noether_corpus()) {
    if (entry.F.socle_degree() < 2) continue;
    const ArtinAlgebra A(entry.F);
    const bool same = hessian_matrix(A, 1).basis == lefschetz_hessian(A, 1).basis;
    EXPECT_EQ(same, !is_cone(entry.F)) << entry.name;
  }
}

TEST(Hessian, DeterminantAtPoints) {
  const ArtinAlgebra A(dual("X1*X2*X3*X4^2", 4));
  EXPECT_NE(hessian_det_at(A, 2, kOnes), 0);
  EXPECT_NE(hessian_det_at(A, 1, kOnes), 0);
  const std::vector<Rational> origin{0, 0, 0, 0};
  EXPECT_EQ(hessian_det_at(A, 1, origin), 0);
  const ArtinAlgebra cone(dual("X1^5", 4));
  for (const auto& p : {kOnes, std::vector<Rational>{3, -1, 2, 5}}) {
    EXPECT_EQ(hessian_det_at(hessian_matrix(cone, 1), p), 0);
  }
}

TEST(Hessian, OrderOutOfRange) {
  const ArtinAlgebra A(dual("X1*X2*X3*X4^2", 4));
  EXPECT_THROW(hessian_matrix(A, 0), OrderOutOfRange);
  EXPECT_THROW(hessian_matrix(A, 3), OrderOutOfRange);
  EXPECT_THROW(lefschetz_hessian(A, 3), OrderOutOfRange);
}

TEST(Hessian, IdenticalVanishing) {
  EXPECT_TRUE(hessian_is_identically_zero(ArtinAlgebra(dual("X1^5", 4)), 1));
  const ArtinAlgebra A(dual("X1*X2*X3*X4^2", 4));
  EXPECT_FALSE(hessian_is_identically_zero(A, 1));
  EXPECT_FALSE(hessian_is_identically_zero(A, 2));
}

TEST(Hessian, DegreeBound) {
  const ArtinAlgebra A(dual("X1*X2*X3*X4^2", 4));
  EXPECT_EQ(hessian_degree_bound(A, 1), 4 * 3);
  EXPECT_EQ(hessian_degree_bound(A, 2), 7 * 1);
}

TEST(Hessian, SlpByHessians) {
  const ArtinAlgebra A(dual("X1*X2*X3*X4^2", 4));
  EXPECT_TRUE(slp_by_hessians(A, kOnes));
  const std::vector<Rational> origin{0, 0, 0, 0};
  EXPECT_FALSE(slp_by_hessians(A, origin));
  // points with no x1 component kill the cone X1^5
  const ArtinAlgebra cone(dual("X1^5", 4));
  EXPECT_FALSE(slp_by_hessians(cone, std::vector<Rational>{0, 1, 1, 1}));
}

TEST(Hessian, SlpByHessiansMatchesMultiplicationMaps) {
  for (const auto& entry : testing::global_corpus()) {
    const ArtinAlgebra A(entry.F);
    for (int t = 0; t < 4; ++t) {
      const LinearForm l = candidate_form(A.nvars(), 21, t, 2);
      EXPECT_EQ(slp_by_hessians(A, l.coefficients), has_slp_at(A, l)) << entry.name;
    }
  }
}

TEST(Hessian, HasSlpDecisions) {
  const SlpDecision a = has_slp(ArtinAlgebra(dual("X1*X2*X3*X4^2", 4)));
  EXPECT_TRUE(a.has_slp);
  ASSERT_TRUE(a.witness);
  EXPECT_TRUE(slp_by_hessians(ArtinAlgebra(dual("X1*X2*X3*X4^2", 4)), *a.witness));

  const SlpDecision b = has_slp(ArtinAlgebra(
      testing::dual_of_ideal("x1*x3-x2*x4,x2^2,x2*x3,x3^2,x3*x4,x4^2,x1^4*x2,x1^4*x4,x1^5", 4, 5)));
  EXPECT_TRUE(b.has_slp);
}

TEST(Hessian, ConeX1FifthHasSlpAsAStringAlgebra) {
  // A = K[x1..x4]/ann(X1^5) is K[x1]/(x1^6); x1 is a strong Lefschetz element
  // even though the usual Hessian vanishes.
  const ArtinAlgebra A(dual("X1^5", 4));
  const SlpDecision d = has_slp(A);
  EXPECT_TRUE(d.has_slp);
  EXPECT_EQ(jordan_type(A, LinearForm{{1, 0, 0, 0}}), Partition({6}));
  EXPECT_TRUE(hessian_is_identically_zero(A, 1));
  for (bool v : d.hessian_vanishes) EXPECT_FALSE(v);
}

TEST(Hessian, HasSlpAgreesWithProbesOnQuintics) {
  for (const auto& entry : testing::quintic_corpus()) {
    const ArtinAlgebra A(entry.F);
    const SlpDecision d = has_slp(A);
    const LefschetzProbe probe = probe_lefschetz(A, {0, 5, 10});
    if (probe.slp_witness) {
      EXPECT_TRUE(d.has_slp) << entry.name;
    }
    if (d.witness) {
      EXPECT_TRUE(has_slp_at(A, form_at(*d.witness))) << entry.name;
    }
  }
}

}  // namespace
}  // namespace apolar
