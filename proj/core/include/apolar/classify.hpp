#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "apolar/resolution.hpp"
#include "apolar/sequences.hpp"

namespace apolar {

// ---------------------------------------------------------------------------
// Complete intersections

/// Generator degrees d_1 <= ... <= d_n of a complete intersection, each >= 2.
struct CIDegrees {
  std::vector<int> degrees;

  CIDegrees() = default;
  explicit CIDegrees(std::vector<int> d);

  int nvars() const noexcept { return static_cast<int>(degrees.size()); }
  /// sum d_i - n
  int socle_degree() const;
  std::string to_string() const;  // "(2,2,2,3)"

  friend bool operator==(const CIDegrees&, const CIDegrees&) = default;
};

/// All nondecreasing tuples with d_i >= 2 and sum d_i = s + n, in lexicographic
/// order.
std::vector<CIDegrees> enumerate_ci_degrees(int n, int s);

/// b_{i,j} = number of i-subsets of D with degree sum j.
BettiTable koszul_betti_from_degrees(const CIDegrees& D);

/// Coefficients of prod (1 - T^{d_i}) / (1 - T)^n.
HVector hvector_from_ci_degrees(const CIDegrees& D, int n);

struct CIReport {
  int n = 0;
  int s = 0;
  std::vector<CIDegrees> degrees;
  std::vector<BettiTable> tables;
  std::vector<HVector> hvectors;
};

CIReport classify_ci(int n, int s);

// ---------------------------------------------------------------------------
// Betti templates

/// A Betti table with some cells fixed and others named unknowns. A name may
/// label several cells (mirror images under Gorenstein symmetry).
struct BettiTemplate {
  int n = 4;
  int s = 5;
  std::map<std::pair<int, int>, long> fixed;
  std::map<std::pair<int, int>, std::string> unknowns;

  /// Distinct unknown names, in order of first appearance by (i, j).
  std::vector<std::string> names() const;
  /// Throws InvalidArgument on a missing name or a negative value.
  BettiTable instantiate(const std::map<std::string, long>& values) const;
  /// True when every mirrored pair of cells holds the same constant or name.
  bool is_symmetric() const;
};

/// Unknown table for H = (1,4,4,4,4,1): rows 1..4 hold
/// (6 b c), (d e f), (f e d), (c b 6).
BettiTemplate k4_template();
/// Equigenerated forms: quadric-generated (unknowns a, b, e) and
/// cubic-generated (unknowns d, e).
BettiTemplate equigenerated_quadric_template();
BettiTemplate equigenerated_cubic_template();

// ---------------------------------------------------------------------------
// Equigenerated ideals, n = 4, s = 5

struct EquigeneratedReport {
  long bound = 20;
  /// Quadric template. Unknowns (k, a, b, e) with
  ///   k = 10 - a, k = 20 - 4a + b, 4 = 35 - 10a + 4b + e, 1 = 56 - 20a + 10b + 5e.
  std::array<std::string, 4> unknowns{"k", "a", "b", "e"};
  std::vector<std::array<long, 4>> quadric_solutions;
  /// One reason per solution, empty if the solution survives.
  std::vector<std::string> quadric_exclusions;
  std::optional<CIDegrees> excluded_ci;
  std::optional<BettiTable> excluded_ci_table;

  /// Cubic template.
  long d = 0;
  long e = 0;
  HVector hvector;
  std::optional<BettiTable> table;
};

/// Nonnegative integer solutions, each coordinate at most bound, of A x = rhs.
/// Solves by RREF and enumerates the free variables.
std::vector<std::vector<long>> bounded_integer_solutions(const QMatrix& A,
                                                         const std::vector<Rational>& rhs,
                                                         long bound);

EquigeneratedReport classify_equigenerated(long bound = 20);

// ---------------------------------------------------------------------------
// H = (1,4,4,4,4,1)

enum class K4Constraint : int {
  DegreeThree = 0,   // b = d + 8
  DegreeFour,        // c - e + f = 3
  MacaulayJ2,        // h_3(S/J_2) = b - 4 <= 4^<2>
  GotzmannJ2,        // equality above forces c >= 11 - G
  MacaulayJ3,        // h_4(S/J_3) <= 4^<3>
  FBound,            // f <= 1
  MacaulayJ4,        // h_5(S/J_4) <= 4^<4>
  MacaulayJ2Degree4  // d = 0: h_5(S/J_2) <= h_4(S/J_2)^<4>
};

inline constexpr int kK4ConstraintCount = 8;

struct K4ConstraintInfo {
  K4Constraint id;
  std::string name;
  std::string statement;
};

const std::array<K4ConstraintInfo, kK4ConstraintCount>& k4_constraints();
std::optional<K4Constraint> parse_k4_constraint(const std::string& name);

struct K4Tuple {
  long b = 0, c = 0, d = 0, e = 0, f = 0;
  std::string to_string() const;  // "(8,3,0,0,0)"
  friend bool operator==(const K4Tuple&, const K4Tuple&) = default;
};

struct K4Elimination {
  K4Constraint constraint;
  bool enabled = true;
  long eliminated = 0;
  std::optional<K4Tuple> first;  // lexicographically first tuple it eliminated
};

struct K4Report {
  long bound = 20;
  long examined = 0;
  std::vector<K4Elimination> log;  // one entry per constraint, in order
  std::vector<K4Tuple> survivors;
};

/// Enumerates 0 <= b,c,d,e,f <= bound in lexicographic order. Each tuple is
/// charged to the first enabled constraint it violates. Throws
/// InvalidArgument if bound < 10.
K4Report classify_k4(long bound = 20, const std::set<K4Constraint>& disabled = {});

BettiTable k4_table(const K4Tuple& t);

// ---------------------------------------------------------------------------
// Betti poset and conjectured tables

/// Entrywise b1 <= b2. Throws DimensionMismatch on different n.
bool betti_leq(const BettiTable& b1, const BettiTable& b2);

struct ConjecturedTable {
  std::string label;
  BettiTable table;
};

/// Candidate tables for H = (1,4,7,7,4,1), conjectural data.
const std::vector<ConjecturedTable>& conjectured_tables();

struct TableCheck {
  std::string label;
  bool symmetric = false;
  std::optional<HVector> hvector;  // empty if hilbert_from_betti threw
  bool hilbert_consistent = false;
};

struct TablesReport {
  HVector expected;
  std::vector<TableCheck> checks;
  /// leq[a][b] = betti_leq(table a, table b)
  std::vector<std::vector<bool>> leq;
  /// Covering relations (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;

  bool all_consistent() const;
  bool is_partial_order() const { return reflexive && antisymmetric && transitive; }
};

TablesReport check_tables(const std::vector<ConjecturedTable>& tables, const HVector& expected);
TablesReport check_conjectured_tables();

// ---------------------------------------------------------------------------
// Text reports

std::string to_text(const CIReport& r);
std::string to_text(const EquigeneratedReport& r);
std::string to_text(const K4Report& r);
std::string to_text(const TablesReport& r, const std::vector<ConjecturedTable>& tables);

}  // namespace apolar
