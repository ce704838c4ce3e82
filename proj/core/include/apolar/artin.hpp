#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/exactla.hpp"
#include "apolar/polyring.hpp"
#include "apolar/sequences.hpp"

namespace apolar {

/// l = a_1 x_1 + ... + a_n x_n.
struct LinearForm {
  std::vector<Rational> coefficients;

  static LinearForm all_ones(int n);
  int nvars() const noexcept { return static_cast<int>(coefficients.size()); }
  bool is_zero() const;
  Poly to_poly() const;
  /// "1,1,1,1" style, the format accepted by parse_linear_form.
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Parses a comma-separated coefficient list ("1,-2,1/3,0").
LinearForm parse_linear_form(const std::string& text);

/// The graded algebra A = S / ann(F).
///
/// A_d is spanned by the monomials that are not pivots of the echelonized
/// ideal piece I_d, taken in grevlex order. Multiplication by each variable is
/// stored as a matrix A_d -> A_{d+1} (columns indexed by the source basis).
class ArtinAlgebra {
 public:
  explicit ArtinAlgebra(DualGenerator F);

  const DualGenerator& generator() const noexcept { return F_; }
  int socle_degree() const noexcept { return F_.socle_degree(); }
  int nvars() const noexcept { return F_.nvars(); }
  const HVector& hilbert() const noexcept { return hilbert_; }
  long dimension() const { return hilbert_.total(); }
  const GradedIdeal& ideal() const noexcept { return ideal_; }

  const std::vector<Monomial>& basis(int d) const;
  /// x_var : A_d -> A_{d+1}, for 0 <= d < s.
  const QMatrix& structure(int var, int d) const;
  /// Coordinates in the basis of A_d of a homogeneous element of S_d.
  std::vector<Rational> reduce(const Poly& p) const;
  /// Position of A_d inside the total space A_0 + ... + A_s.
  std::size_t offset(int d) const;

 private:
  DualGenerator F_;
  GradedIdeal ideal_;
  HVector hilbert_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::vector<std::size_t>> basis_positions_;  // inside S_d
  std::vector<std::vector<QMatrix>> structure_;            // [d][var]
};

ArtinAlgebra build_algebra(const DualGenerator& F);

/// l^k : A_i -> A_{i+k}; h_{i+k} x h_i.
QMatrix mult_map(const ArtinAlgebra& A, const LinearForm& l, int i, int k);

bool has_wlp_at(const ArtinAlgebra& A, const LinearForm& l);

/// l^{s-2i} : A_i -> A_{s-i} bijective for every i = 0..floor(s/2).
bool has_slp_at(const ArtinAlgebra& A, const LinearForm& l);

/// Multiplication by l on the whole of A as one nilpotent operator.
QMatrix total_operator(const ArtinAlgebra& A, const LinearForm& l);

/// Jordan block sizes of multiplication by l. Part k occurs
/// r_{k-1} - 2 r_k + r_{k+1} times, where r_k = rank of the k-th power of
/// total_operator.
Partition jordan_type(const ArtinAlgebra& A, const LinearForm& l);

/// The H-vector read as a partition (sorted decreasingly).
Partition hvector_partition(const HVector& h);

struct ProbeOptions {
  std::uint64_t seed = 0;
  int trials = 5;
  int coeff_bound = 10;
};

struct ProbeTrial {
  LinearForm form;
  bool wlp = false;
  bool slp = false;
};

struct LefschetzProbe {
  std::optional<LinearForm> wlp_witness;
  std::optional<LinearForm> slp_witness;
  std::vector<ProbeTrial> trials;

  int tried() const noexcept { return static_cast<int>(trials.size()); }
};

/// Candidate forms for witness searches: index 0 is x_1 + ... + x_n; index
/// t >= 1 has integer coefficients drawn uniformly from [-bound, bound] by a
/// generator seeded with (seed, t), so each candidate is independent of the
/// order in which candidates are produced.
LinearForm candidate_form(int n, std::uint64_t seed, int index, int bound);

/// Tries `trials` candidate forms and logs the WLP/SLP outcome of each.
LefschetzProbe probe_lefschetz(const ArtinAlgebra& A, const ProbeOptions& opts = {});

}  // namespace apolar
