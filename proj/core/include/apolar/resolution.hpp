#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/artin.hpp"
#include "apolar/sequences.hpp"

namespace apolar {

/// Graded Betti numbers b_{i,j}: S(-j) appears b_{i,j} times in homological
/// degree i. Only nonzero entries are stored.
///
/// The rendered layout puts b_{i,j} in column i and row j - i, so an entry a
/// reader finds in row r, column i is b_{i,i+r}.
class BettiTable {
 public:
  explicit BettiTable(int n) : n_(n) {}

  int nvars() const noexcept { return n_; }
  long get(int i, int j) const;
  void set(int i, int j, long value);
  const std::map<std::pair<int, int>, long>& entries() const noexcept { return entries_; }

  /// Sum over j for each homological degree 0..n.
  std::vector<long> totals() const;
  /// Largest j - i among nonzero entries (the regularity).
  int max_row() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_;
  std::map<std::pair<int, int>, long> entries_;
};

/// Builds a table from the displayed rows: rows[r][i] = b_{i,i+r}.
BettiTable betti_from_rows(int n, const std::vector<std::vector<long>>& rows);

/// Fixed-width text: header of column indices, a total row, then one row per
/// j - i with "." for zeros.
std::string render_betti(const BettiTable& b);

/// Chain and homology dimensions of one graded strand of the Koszul complex
/// K(x_1..x_n) tensored with A, in internal degree j.
struct KoszulStrand {
  int degree = 0;
  std::vector<long> chain_dims;     // dim A_{j-i} * C(n, i), i = 0..n
  std::vector<long> homology_dims;  // b_{i,j}, i = 0..n
};

KoszulStrand koszul_strand(const ArtinAlgebra& A, int j);

/// b_{i,j} = dim H_i(K(x) (x) A)_j for 0 <= j <= s + n.
BettiTable betti_table(const ArtinAlgebra& A);
BettiTable betti_table(const DualGenerator& F);

/// Coefficient of T^d in sum (-1)^i b_{i,j} T^j / (1 - T)^n.
long hilbert_series_coefficient(const BettiTable& b, int d);

/// Divides the alternating Betti numerator by (1 - T)^n. Throws
/// InconsistentTable unless the quotient is a polynomial with nonnegative
/// coefficients.
HVector hilbert_from_betti(const BettiTable& b);

/// Hilbert function of S/J_t through degree up_to, where J_t is generated by
/// the pieces of ann(F) of degree at most t.
HVector truncated_ideal_hilbert(const DualGenerator& F, int t, int up_to);

/// h = C(a_i, i) + C(a_{i-1}, i-1) + ... with a_i > a_{i-1} > ... (greedy).
struct MacaulayRep {
  int degree = 0;
  long value = 0;
  std::vector<std::pair<long, int>> terms;  // (top, bottom)

  std::string to_string() const;
};

MacaulayRep macaulay_rep(long h, int i);

/// h^<i> = sum C(a_k + 1, k + 1); the largest possible next value.
long macaulay_bound(long h, int i);

struct MacaulayViolation {
  int degree = 0;  // index of the entry exceeding its bound
  long value = 0;
  long bound = 0;
};

/// Every index i+1 (i >= 1) with h_{i+1} > macaulay_bound(h_i, i).
std::vector<MacaulayViolation> check_macaulay(const HVector& h);

/// sum C(a_k + j, k + j) over macaulay_rep(h, t): the value forced in degree
/// t + j once growth from degree t is maximal for an ideal generated in
/// degree t.
long gotzmann_growth(long h, int t, int j);

/// b_{i,j} == b_{n-i, n+s-j} for every entry.
bool betti_symmetry_check(const BettiTable& b, int s);

}  // namespace apolar
