// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "apolar/apolarity.hpp"
#include "apolar/artin.hpp"
#include "apolar/classify.hpp"
#include "apolar/hessian.hpp"
#include "apolar/resolution.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

namespace {

using namespace apolar;
using testing::dual;
using testing::dual_of_ideal;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

BettiTable rows_table(const std::vector<std::vector<long>>& middle) {
  std::vector<std::vector<long>> rows{{1, 0, 0, 0, 0}};
  for (const auto& m : middle) rows.push_back({0, m[0], m[1], m[2], 0});
  rows.push_back({0, 0, 0, 0, 1});
  return betti_from_rows(4, rows);
}

void c1(Outcome& o) {
  const DualGenerator F = dual("X1*X2*X3", 3);
  const RingSpec ring(3);
  const auto gens = parse_list("x1^2,x2^2,x3^2", ring);
  const GradedIdeal I = GradedIdeal::annihilator(F);
  const GradedIdeal J = GradedIdeal::generated_by(gens, ring, I.top_degree());
  o.check(I == J, "I_F != <x1^2,x2^2,x3^2>");
  const BettiTable b = betti_table(F);
  o.check(b.totals() == std::vector<long>{1, 3, 3, 1}, "totals");
  o.check(b == koszul_betti_from_degrees(CIDegrees({2, 2, 2})), "not the Koszul table");
  o.detail << " totals (1,3,3,1)";
}

void c2(Outcome& o) {
  const DualGenerator F = dual("X1*X2*X3*X4^2", 4);
  o.check(hilbert_function(F) == HVector{{1, 4, 7, 7, 4, 1}}, "H");
  const BettiTable b = betti_table(F);
  BettiTable expected(4);
  for (auto [i, j, v] : std::vector<std::array<int, 3>>{{0, 0, 1},
                                                        {1, 2, 3},
                                                        {1, 3, 1},
                                                        {2, 4, 3},
                                                        {2, 5, 3},
                                                        {3, 6, 1},
                                                        {3, 7, 3},
                                                        {4, 9, 1}}) {
    expected.set(i, j, v);
  }
  o.check(b == expected, "CI table mismatch");
  o.detail << " H=" << hilbert_function(F).to_string();
}

void c3(Outcome& o) {
  const DualGenerator F = dual_of_ideal(testing::kK4Ideal, 4, 5);
  o.check(hilbert_function(F) == HVector{{1, 4, 4, 4, 4, 1}}, "H");
  const BettiTable b = betti_table(F);
  const BettiTable expected = rows_table({{6, 8, 3}, {0, 0, 0}, {0, 0, 0}, {3, 8, 6}});
  o.check(b == expected, "table mismatch");
  o.check(b.totals() == std::vector<long>{1, 9, 16, 9, 1}, "totals");
  o.detail << " F=" << format(F.form());
}

void c4(Outcome& o) {
  const EquigeneratedReport r = classify_equigenerated(60);
  o.check(r.quadric_solutions == std::vector<std::array<long, 4>>{{6, 4, 2, 1}},
          "quadric template");
  o.check(r.excluded_ci && r.excluded_ci->socle_degree() == 4 && !r.quadric_exclusions[0].empty(),
          "socle-degree exclusion");
  o.check(r.table && r.table->totals() == std::vector<long>{1, 10, 18, 10, 1},
          "cubic template totals");
  o.check(r.hvector == HVector{{1, 4, 10, 10, 4, 1}}, "H");
  o.check(testing::quadric_template_search(60) == r.quadric_solutions, "quadric oracle");
  o.check(testing::cubic_template_search(60) == std::vector<std::array<long, 2>>{{r.d, r.e}},
          "cubic oracle");
  o.detail << " (k,a,b,e)=(6,4,2,1), d=" << r.d << " e=" << r.e << ", oracle bound 60";
}

void c5(Outcome& o) {
  for (long bound : {10L, 20L, 50L}) {
    const K4Report r = classify_k4(bound);
    o.check(r.survivors == std::vector<K4Tuple>{{8, 3, 0, 0, 0}}, "bound " + std::to_string(bound));
  }
  o.detail << " survivor (8,3,0,0,0) at bounds 10, 20, 50";
}

void c6(Outcome& o) {
  const auto D = enumerate_ci_degrees(4, 5);
  o.check(D == std::vector<CIDegrees>{CIDegrees({2, 2, 2, 3})}, "degrees");
  o.check(!D.empty() && hvector_from_ci_degrees(D[0], 4) == HVector{{1, 4, 7, 7, 4, 1}}, "H");
}

void c7(Outcome& o) {
  const ArtinAlgebra A(dual_of_ideal(testing::kCIIdeal, 4, 5));
  const Partition P = jordan_type(A, LinearForm::all_ones(4));
  o.check(P == Partition({6, 4, 4, 4, 2, 2, 2}), "Jordan type " + P.to_string());
  o.check(P == conjugate_partition(hvector_partition(A.hilbert())), "conjugate");
  o.detail << " P=" << P.to_string();
}

void c8(Outcome& o) {
  long pairs = 0, mismatches = 0, usual_pairs = 0;
  auto run = [&](const std::vector<testing::CorpusEntry>& corpus, std::uint64_t seed) {
    for (const auto& entry : corpus) {
      const ArtinAlgebra A(entry.F);
      const int s = A.socle_degree();
      if (s < 2) continue;
      for (int t = 0; t < 4; ++t) {
        const LinearForm l = candidate_form(A.nvars(), seed, t, 2);
        for (int i = 1; i <= s / 2; ++i) {
          const Rational det = hessian_det_at(lefschetz_hessian(A, i), l.coefficients);
          const QMatrix m = mult_map(A, l, i, s - 2 * i);
          const bool bijective = rank(m) == m.rows() && m.rows() == m.cols();
          ++pairs;
          if ((det != 0) != bijective) {
            ++mismatches;
            o.detail << " mismatch " << entry.name << " i=" << i;
          }
          // the usual Hessian is the same matrix when F is not a cone
          if (i >= 2 || !is_cone(entry.F)) {
            ++usual_pairs;
            if ((hessian_det_at(A, i, l.coefficients) != 0) != bijective) {
              ++mismatches;
              o.detail << " usual mismatch " << entry.name << " i=" << i;
            }
          }
        }
      }
    }
  };
  run(testing::global_corpus(), 101);
  run(testing::gordan_noether_corpus(), 202);
  run(testing::quintic_corpus(), 303);
  o.check(pairs >= 200, "fewer than 200 pairs");
  o.check(mismatches == 0, "mismatches");
  o.detail << " " << pairs << " pairs (" << usual_pairs << " also via hessian_det_at), "
           << mismatches << " mismatches";
}

void c9(Outcome& o) {
  const auto& corpus = testing::gordan_noether_corpus();
  long cones = 0, mismatches = 0;
  for (const auto& entry : corpus) {
    if (entry.F.socle_degree() < 2) continue;
    const bool cone = is_cone(entry.F);
    if (entry.cone) o.check(*entry.cone == cone, "construction says otherwise: " + entry.name);
    cones += cone;
    if (hessian_is_identically_zero(ArtinAlgebra(entry.F), 1) != cone) {
      ++mismatches;
      o.detail << " mismatch " << entry.name;
    }
  }
  o.check(corpus.size() >= 20, "corpus too small");
  o.check(cones >= 5, "fewer than 5 cones");
  o.check(mismatches == 0, "mismatches");
  o.detail << " " << corpus.size() << " forms, " << cones << " cones, " << mismatches
           << " mismatches";
}

void c10(Outcome& o) {
  const auto& corpus = testing::quintic_corpus();
  long with_wlp = 0, counterexamples = 0;
  std::set<long> ks;
  for (const auto& entry : corpus) {
    const ArtinAlgebra A(entry.F);
    const HVector& h = A.hilbert();
    o.check(is_nondegenerate(entry.F) && A.socle_degree() == 5 && A.nvars() == 4 && h[1] == 4,
            "not a nondegenerate quintic: " + entry.name);
    ks.insert(h[2]);
    const LefschetzProbe probe = probe_lefschetz(A, {0, 5, 10});
    if (!probe.wlp_witness) continue;
    ++with_wlp;
    if (!has_slp(A).has_slp) {
      ++counterexamples;
      o.detail << " counterexample " << entry.name;
    }
  }
  o.check(corpus.size() >= 25, "corpus too small");
  o.check(ks == std::set<long>{4, 5, 6, 7, 8, 9, 10}, "k = 4..10 not spanned");
  o.check(counterexamples == 0, "counterexamples");
  o.detail << " " << corpus.size() << " forms, " << with_wlp << " with a WLP witness, "
           << counterexamples << " counterexamples";
}

void c11(Outcome& o) {
  o.check(macaulay_bound(4, 2) == 5, "4^<2>");
  o.check(macaulay_bound(4, 3) == 5, "4^<3>");
  o.check(macaulay_bound(4, 4) == 4, "4^<4>");
}

void c12(Outcome& o) {
  long violations = 0;
  const auto& corpus = testing::global_corpus();
  for (const auto& entry : corpus) {
    const BettiTable b = betti_table(entry.F);
    const HVector h = hilbert_function(entry.F);
    const int s = entry.F.socle_degree();
    auto fail = [&](const std::string& what) {
      ++violations;
      o.detail << " " << entry.name << ": " << what;
    };
    if (hilbert_from_betti(b) != h) fail("hilbert_from_betti");
    if (!betti_symmetry_check(b, s)) fail("symmetry");
    for (int j = 0; j <= s + entry.F.nvars(); ++j) {
      const long expected =
          j >= 1 && j <= s + 1 ? static_cast<long>(minimal_generator_count(entry.F, j)) : 0;
      if (b.get(1, j) != expected) fail("b_1," + std::to_string(j));
    }
    if (!check_macaulay(h).empty()) fail("Macaulay");
  }
  o.check(violations == 0, "violations");
  o.detail << " " << corpus.size() << " forms, " << violations << " violations";
}

void c13(Outcome& o) {
  const TablesReport r = check_conjectured_tables();
  o.check(r.all_consistent(), "symmetric and Hilbert-consistent");
  o.check(r.is_partial_order(), "partial order");
  o.detail << " " << r.checks.size() << " tables, " << r.hasse.size() << " covering relations";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 Koszul resolution of X1X2X3", c1},
      {"2 CI table of X1X2X3X4^2", c2},
      {"3 H = (1,4,4,4,4,1) table", c3},
      {"4 equigenerated classification", c4},
      {"5 k4 enumeration", c5},
      {"6 complete intersection degrees", c6},
      {"7 Jordan type of the (2,2,2,3) ideal", c7},
      {"8 Hessian determinants vs multiplication maps", c8},
      {"9 Gordan-Noether on <= 4 variables", c9},
      {"10 WLP implies SLP for (1,4,k,k,4,1)", c10},
      {"11 Macaulay bounds", c11},
      {"12 global consistency", c12},
      {"13 conjectured (1,4,7,7,4,1) tables", c13},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, " (%.2fs)", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ":" << o.detail.str() << timing << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
