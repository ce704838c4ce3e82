#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "apolar/artin.hpp"

namespace apolar {

/// A Hessian matrix: entries (a_u a_v) o F over a list of degree-i monomials.
/// Each entry is zero or a form of degree s - 2i in the dual ring.
struct HessianMatrix {
  int order = 0;
  std::vector<Monomial> basis;
  std::vector<Poly> entries;  // row-major, size() x size()

  std::size_t size() const noexcept { return basis.size(); }
  const Poly& at(std::size_t u, std::size_t v) const { return entries[u * size() + v]; }
  bool is_symmetric() const;
  /// Entrywise evaluation at a point.
  QMatrix evaluate(std::span<const Rational> point) const;
};

/// Hess^i(F). Order 1 is the usual Hessian of second partials in all n
/// variables; order i >= 2 uses the canonical basis of A_i. The two
/// conventions agree at order 1 exactly when F is not a cone.
HessianMatrix hessian_matrix(const ArtinAlgebra& A, int i);
HessianMatrix hessian_matrix(const DualGenerator& F, int i);

/// Hessian over the canonical basis of A_i for every order, the matrix of the
/// pairing (u, v) -> (u v l^{s-2i}) o F up to the factor (s-2i)!. Its
/// determinant at a is nonzero iff l_a^{s-2i}: A_i -> A_{s-i} is bijective.
HessianMatrix lefschetz_hessian(const ArtinAlgebra& A, int i);

Rational hessian_det_at(const HessianMatrix& H, std::span<const Rational> point);
Rational hessian_det_at(const ArtinAlgebra& A, int i, std::span<const Rational> point);

/// Total degree bound size(H) * (s - 2i) of det H.
int hessian_degree_bound(const HessianMatrix& H, int s);
int hessian_degree_bound(const ArtinAlgebra& A, int i);

/// Decides det H == 0 by evaluating on the full grid {0..D}^n with
/// D = hessian_degree_bound. A nonzero polynomial of total degree <= D cannot
/// vanish on that grid, so the answer is exact.
bool is_identically_zero(const HessianMatrix& H, int s, int n);
/// The same test for hessian_matrix(A, i).
bool hessian_is_identically_zero(const ArtinAlgebra& A, int i);

/// The form a_1 x_1 + ... + a_n x_n attached to a point.
LinearForm form_at(std::span<const Rational> point);

/// True iff l_a^s is nonzero on A_0 (checked with mult_map) and the
/// determinant of lefschetz_hessian(A, i) at a is nonzero for i = 1..floor(s/2).
bool slp_by_hessians(const ArtinAlgebra& A, std::span<const Rational> point);

struct SlpDecision {
  bool has_slp = false;
  /// hessian_vanishes[i - 1] answers det lefschetz_hessian(A, i) == 0, for
  /// i = 1..floor(s/2).
  std::vector<bool> hessian_vanishes;
  /// A point passing slp_by_hessians, present iff has_slp.
  std::optional<std::vector<Rational>> witness;
};

/// A has SLP for some linear form iff no Lefschetz Hessian vanishes
/// identically. When it does, a witness is searched among
/// candidate_form(n, seed, t, 10) and then on a grid large enough to contain a
/// nonzero of the product of all Hessian determinants.
SlpDecision has_slp(const ArtinAlgebra& A, std::uint64_t seed = 0);

}  // namespace apolar
