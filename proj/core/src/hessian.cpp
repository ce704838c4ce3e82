#include "apolar/hessian.hpp"

#include "apolar/error.hpp"

namespace apolar {

bool HessianMatrix::is_symmetric() const {
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      if (!(at(u, v) == at(v, u))) return false;
  return true;
}

QMatrix HessianMatrix::evaluate(std::span<const Rational> point) const {
  QMatrix m(size(), size());
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u; v < size(); ++v) {
      m(u, v) = apolar::evaluate(at(u, v), point);
      m(v, u) = m(u, v);
    }
  }
  return m;
}

namespace {

void check_order(const ArtinAlgebra& A, int i) {
  const int s = A.socle_degree();
  if (i < 1 || i > s / 2) {
    throw OrderOutOfRange("Hessian order " + std::to_string(i) + " outside 1.." +
                          std::to_string(s / 2));
  }
}

void check_point(const ArtinAlgebra& A, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != A.nvars()) {
    throw DimensionMismatch("point has " + std::to_string(point.size()) +
                            " coordinates, ring has " + std::to_string(A.nvars()));
  }
}

// Visits {0..bound}^n in lexicographic order until visit returns true.
template <typename Visit>
bool any_grid_point(int n, int bound, Visit&& visit) {
  std::vector<Rational> point(static_cast<std::size_t>(n), Rational(0));
  std::vector<int> odometer(static_cast<std::size_t>(n), 0);
  while (true) {
    if (visit(std::span<const Rational>(point))) return true;
    int k = n - 1;
    while (k >= 0 && odometer[k] == bound) {
      odometer[k] = 0;
      point[k] = 0;
      --k;
    }
    if (k < 0) return false;
    ++odometer[k];
    point[k] = odometer[k];
  }
}

}  // namespace

namespace {

HessianMatrix hessian_over(const ArtinAlgebra& A, int i, std::vector<Monomial> basis) {
  HessianMatrix H;
  H.order = i;
  H.basis = std::move(basis);
  const std::size_t h = H.basis.size();
  H.entries.assign(h * h, Poly(Alphabet::Dual, A.nvars()));
  const Poly& F = A.generator().form();
  for (std::size_t u = 0; u < h; ++u) {
    for (std::size_t v = u; v < h; ++v) {
      const Poly op = Poly::monomial(Alphabet::Operator, H.basis[u] * H.basis[v]);
      H.entries[u * h + v] = diff_action(op, F);
      H.entries[v * h + u] = H.entries[u * h + v];
    }
  }
  return H;
}

}  // namespace

HessianMatrix hessian_matrix(const ArtinAlgebra& A, int i) {
  check_order(A, i);
  if (i == 1) return hessian_over(A, i, monomial_basis(A.generator().ring(), 1));
  return hessian_over(A, i, A.basis(i));
}

HessianMatrix hessian_matrix(const DualGenerator& F, int i) {
  return hessian_matrix(ArtinAlgebra(F), i);
}

HessianMatrix lefschetz_hessian(const ArtinAlgebra& A, int i) {
  check_order(A, i);
  return hessian_over(A, i, A.basis(i));
}

Rational hessian_det_at(const HessianMatrix& H, std::span<const Rational> point) {
  return det(H.evaluate(point));
}

Rational hessian_det_at(const ArtinAlgebra& A, int i, std::span<const Rational> point) {
  check_order(A, i);
  check_point(A, point);
  return hessian_det_at(hessian_matrix(A, i), point);
}

int hessian_degree_bound(const HessianMatrix& H, int s) {
  return static_cast<int>(H.size()) * (s - 2 * H.order);
}

int hessian_degree_bound(const ArtinAlgebra& A, int i) {
  return hessian_degree_bound(hessian_matrix(A, i), A.socle_degree());
}

bool is_identically_zero(const HessianMatrix& H, int s, int n) {
  if (H.size() == 0) return false;  // empty determinant is 1
  const int bound = hessian_degree_bound(H, s);
  const bool found_nonzero = any_grid_point(n, bound, [&](auto point) {
    return sgn(hessian_det_at(H, point)) != 0;
  });
  return !found_nonzero;
}

bool hessian_is_identically_zero(const ArtinAlgebra& A, int i) {
  return is_identically_zero(hessian_matrix(A, i), A.socle_degree(), A.nvars());
}

LinearForm form_at(std::span<const Rational> point) {
  return LinearForm{std::vector<Rational>(point.begin(), point.end())};
}

namespace {

bool slp_with(const ArtinAlgebra& A, const std::vector<HessianMatrix>& hessians,
              std::span<const Rational> point) {
  const LinearForm l = form_at(point);
  if (l.is_zero()) return false;
  if (rank(mult_map(A, l, 0, A.socle_degree())) != 1) return false;
  for (const auto& H : hessians) {
    if (sgn(hessian_det_at(H, point)) == 0) return false;
  }
  return true;
}

std::vector<HessianMatrix> all_hessians(const ArtinAlgebra& A) {
  std::vector<HessianMatrix> out;
  for (int i = 1; i <= A.socle_degree() / 2; ++i) out.push_back(lefschetz_hessian(A, i));
  return out;
}

}  // namespace

bool slp_by_hessians(const ArtinAlgebra& A, std::span<const Rational> point) {
  check_point(A, point);
  return slp_with(A, all_hessians(A), point);
}

SlpDecision has_slp(const ArtinAlgebra& A, std::uint64_t seed) {
  const int s = A.socle_degree();
  if (s < 1) throw InvalidArgument("SLP decision needs socle degree at least 1");
  SlpDecision decision;
  const auto hessians = all_hessians(A);
  for (const auto& H : hessians) {
    decision.hessian_vanishes.push_back(is_identically_zero(H, s, A.nvars()));
  }
  decision.has_slp = true;
  for (bool v : decision.hessian_vanishes) decision.has_slp = decision.has_slp && !v;
  if (!decision.has_slp) return decision;

  constexpr int kRandomCandidates = 64;
  for (int t = 0; t < kRandomCandidates; ++t) {
    const LinearForm l = candidate_form(A.nvars(), seed, t, 10);
    if (slp_with(A, hessians, l.coefficients)) {
      decision.witness = l.coefficients;
      return decision;
    }
  }
  // F * prod hess^i is a nonzero polynomial of degree <= s + sum D_i.
  int bound = s;
  for (const auto& H : hessians) bound += hessian_degree_bound(H, s);
  any_grid_point(A.nvars(), bound, [&](auto point) {
    if (!slp_with(A, hessians, point)) return false;
    decision.witness.emplace(point.begin(), point.end());
    return true;
  });
  if (!decision.witness) {
    throw Error("internal: no SLP witness on a grid that must contain one");
  }
  return decision;
}

}  // namespace apolar
