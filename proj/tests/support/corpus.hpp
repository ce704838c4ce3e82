#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/artin.hpp"

namespace apolar::testing {

/// Ideal with H = (1,4,4,4,4,1): six quadrics plus three quintics.
inline const std::string kK4Ideal = "x1*x3-x2*x4,x2^2,x2*x3,x3^2,x3*x4,x4^2,x1^4*x2,x1^4*x4,x1^5";
/// Complete intersection of type (2,2,2,3), socle degree 5.
inline const std::string kCIIdeal = "x1^2,x2^2,x3*x4,x3^3-x4^3";

struct CorpusEntry {
  std::string name;
  DualGenerator F;
  /// Set when the construction decides it: cones are built from fewer
  /// essential variables, monomials using every variable are not cones.
  std::optional<bool> cone;
};

/// F parsed in n variables.
DualGenerator dual(const std::string& text, int n);

/// F recovered from an ideal given in x1..xn.
DualGenerator dual_of_ideal(const std::string& gens, int n, int s);

/// The dual-ring form of a linear form, raised to the power d.
Poly power_of(const LinearForm& l, int d);

/// sum_{m=1..k} L_m^5 in four variables, L_m = candidate_form(4, seed, m, 3).
/// For generic choices H = (1,4,k,k,4,1).
DualGenerator power_sum_quintic(int k, std::uint64_t seed);

/// Quintic with every coefficient drawn from [-5, 5] (k = 10 generically).
DualGenerator dense_quintic(std::uint64_t seed);

/// Mixed-size corpus: the two named ideals, monomials, power sums, cones.
const std::vector<CorpusEntry>& global_corpus();

/// Forms in at most four variables with at least seven cones.
const std::vector<CorpusEntry>& gordan_noether_corpus();

/// Nondegenerate quintics in four variables with H = (1,4,k,k,4,1),
/// four seeds for each k = 4..10.
const std::vector<CorpusEntry>& quintic_corpus();

}  // namespace apolar::testing
