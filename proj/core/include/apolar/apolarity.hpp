#pragma once

#include <span>
#include <vector>

#include "apolar/exactla.hpp"
#include "apolar/polyring.hpp"
#include "apolar/sequences.hpp"

namespace apolar {

/// A nonzero homogeneous form F in the dual ring R; s = deg F.
class DualGenerator {
 public:
  explicit DualGenerator(Poly form);

  const Poly& form() const noexcept { return form_; }
  int socle_degree() const noexcept { return socle_; }
  int nvars() const noexcept { return form_.nvars(); }
  RingSpec ring() const { return RingSpec(form_.nvars()); }

 private:
  Poly form_;
  int socle_;
};

/// Homogeneous ideal of S tracked degree by degree up to `top_degree`. Each
/// piece I_d is stored as the reduced echelon basis of its row space over
/// monomial_basis(n, d).
class GradedIdeal {
 public:
  GradedIdeal(RingSpec ring, std::vector<Echelon> pieces);

  /// ann_S(F) in degrees 0..s+1.
  static GradedIdeal annihilator(const DualGenerator& F);
  /// Ideal generated by homogeneous `gens`, in degrees 0..top.
  static GradedIdeal generated_by(std::span<const Poly> gens,
                                  const RingSpec& ring, int top);

  const RingSpec& ring() const noexcept { return ring_; }
  int top_degree() const noexcept { return static_cast<int>(pieces_.size()) - 1; }
  const Echelon& piece(int d) const;
  /// Basis rows only (rank many).
  QMatrix basis(int d) const;
  std::size_t dim(int d) const { return piece(d).pivots.size(); }
  /// dim S_d - dim I_d.
  std::size_t codim(int d) const;
  bool contains(const Poly& p) const;

  /// (J_t)_d = I_d for d <= t and S_{d-t} * I_t above, through degree up_to.
  GradedIdeal truncated(int t, int up_to) const;

  friend bool operator==(const GradedIdeal& a, const GradedIdeal& b);

 private:
  RingSpec ring_;
  std::vector<Echelon> pieces_;
};

/// Coordinates of p (homogeneous of degree d) over monomial_basis(n, d).
std::vector<Rational> coordinates(const Poly& p, const RingSpec& ring, int d);
/// Inverse of coordinates() in the operator alphabet.
Poly from_coordinates(std::span<const Rational> v, const RingSpec& ring, int d);

/// Echelon basis of S_1 * V in degree d+1, where V's rows live in S_d.
Echelon multiply_by_linear_forms(const QMatrix& rows, const RingSpec& ring,
                                 int d);

/// Matrix of S_i -> R_{s-i}, p -> p o F. Rows follow monomial_basis(n, s-i),
/// columns monomial_basis(n, i).
QMatrix catalecticant(const DualGenerator& F, int i);

/// Canonical echelon basis of (I_F)_i over monomial_basis(n, i), 0 <= i <= s+1.
QMatrix annihilator_piece(const DualGenerator& F, int i);

/// h_i = rank Cat_i(F) for i = 0..s.
HVector hilbert_function(const DualGenerator& F);

bool is_nondegenerate(const DualGenerator& F);
bool is_cone(const DualGenerator& F);

/// The form F in R_s killed by every generator, normalized so that its
/// grevlex-leading coefficient is 1. Throws NotGorensteinSocle unless the
/// joint kernel is one-dimensional.
DualGenerator dual_generator_from_ideal(std::span<const Poly> gens, int s);

/// Number of minimal generators of I_F in degree j: dim I_j - dim S_1 I_{j-1}.
std::size_t minimal_generator_count(const DualGenerator& F, int j);

}  // namespace apolar
