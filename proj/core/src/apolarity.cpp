#include "apolar/apolarity.hpp"

#include <algorithm>

#include "apolar/error.hpp"

namespace apolar {

DualGenerator::DualGenerator(Poly form) : form_(std::move(form)), socle_(0) {
  if (form_.alphabet() != Alphabet::Dual) {
    throw MixedAlphabets("a dual generator lives in the dual ring (X or y)");
  }
  const DegreeInfo d = form_.degree();
  if (d.kind == DegreeInfo::Kind::Zero) {
    throw InvalidArgument("dual generator must be nonzero");
  }
  if (!d.homogeneous()) throw InvalidArgument("dual generator must be homogeneous");
  socle_ = d.value;
}

GradedIdeal::GradedIdeal(RingSpec ring, std::vector<Echelon> pieces)
    : ring_(ring), pieces_(std::move(pieces)) {}

const Echelon& GradedIdeal::piece(int d) const {
  if (d < 0 || d > top_degree()) {
    throw DegreeOutOfRange("ideal tracked in degrees 0.." +
                           std::to_string(top_degree()) + ", asked for " +
                           std::to_string(d));
  }
  return pieces_[static_cast<std::size_t>(d)];
}

QMatrix GradedIdeal::basis(int d) const {
  const Echelon& e = piece(d);
  QMatrix out(0, e.form.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.append_row(e.form.row(r));
  return out;
}

std::size_t GradedIdeal::codim(int d) const {
  return piece(d).form.cols() - dim(d);
}

bool GradedIdeal::contains(const Poly& p) const {
  if (p.is_zero()) return true;
  const DegreeInfo deg = p.degree();
  if (!deg.homogeneous()) {
    // a graded ideal contains p iff it contains every homogeneous component
    std::map<int, Poly> parts;
    for (const auto& [m, c] : p.terms()) {
      auto it = parts.try_emplace(m.degree(), p.alphabet(), p.nvars()).first;
      it->second.add_term(m, c);
    }
    return std::all_of(parts.begin(), parts.end(),
                       [&](const auto& kv) { return contains(kv.second); });
  }
  const auto v = coordinates(p, ring_, deg.value);
  return in_row_space(piece(deg.value), v);
}

bool operator==(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ring_.n != b.ring_.n || a.pieces_.size() != b.pieces_.size()) return false;
  for (int d = 0; d <= a.top_degree(); ++d) {
    if (a.basis(d) != b.basis(d)) return false;
  }
  return true;
}

std::vector<Rational> coordinates(const Poly& p, const RingSpec& ring, int d) {
  const auto idx = monomial_index(ring, d);
  std::vector<Rational> v(idx.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = idx.find(m);
    if (it == idx.end()) {
      throw DegreeOutOfRange("term of degree " + std::to_string(m.degree()) +
                             " outside degree " + std::to_string(d));
    }
    v[it->second] = c;
  }
  return v;
}

Poly from_coordinates(std::span<const Rational> v, const RingSpec& ring, int d) {
  const auto basis = monomial_basis(ring, d);
  if (v.size() != basis.size()) throw DimensionMismatch("coordinate vector length");
  Poly p(Alphabet::Operator, ring.n);
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(basis[i], v[i]);
  return p;
}

Echelon multiply_by_linear_forms(const QMatrix& rows, const RingSpec& ring,
                                 int d) {
  const auto src = monomial_basis(ring, d);
  const auto dst = monomial_index(ring, d + 1);
  QMatrix products(0, dst.size());
  std::vector<Rational> v(dst.size());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    for (int var = 0; var < ring.n; ++var) {
      std::fill(v.begin(), v.end(), Rational(0));
      const Monomial x = Monomial::variable(ring.n, var);
      for (std::size_t c = 0; c < src.size(); ++c) {
        if (sgn(rows(r, c)) != 0) v[dst.at(src[c] * x)] = rows(r, c);
      }
      products.append_row(v);
    }
  }
  return rref(products);
}

GradedIdeal GradedIdeal::annihilator(const DualGenerator& F) {
  std::vector<Echelon> pieces;
  for (int i = 0; i <= F.socle_degree() + 1; ++i) {
    pieces.push_back(rref(annihilator_piece(F, i)));
  }
  return GradedIdeal(F.ring(), std::move(pieces));
}

GradedIdeal GradedIdeal::generated_by(std::span<const Poly> gens,
                                      const RingSpec& ring, int top) {
  std::vector<std::vector<const Poly*>> by_degree(static_cast<std::size_t>(top) + 1);
  for (const auto& g : gens) {
    if (g.alphabet() != Alphabet::Operator) {
      throw MixedAlphabets("ideal generators live in the operator ring (x)");
    }
    if (g.nvars() != ring.n) throw DimensionMismatch("generator ring differs");
    const DegreeInfo d = g.degree();
    if (d.kind == DegreeInfo::Kind::Zero) continue;
    if (!d.homogeneous()) throw InvalidArgument("generator is not homogeneous: " + format(g));
    if (d.value <= top) by_degree[static_cast<std::size_t>(d.value)].push_back(&g);
  }
  std::vector<Echelon> pieces;
  for (int d = 0; d <= top; ++d) {
    QMatrix rows(0, monomial_basis(ring, d).size());
    if (d > 0) {
      const QMatrix prev = pieces.back().form;
      const Echelon up = multiply_by_linear_forms(prev, ring, d - 1);
      for (std::size_t r = 0; r < up.pivots.size(); ++r) rows.append_row(up.form.row(r));
    }
    for (const Poly* g : by_degree[static_cast<std::size_t>(d)]) {
      rows.append_row(coordinates(*g, ring, d));
    }
    pieces.push_back(rref(rows));
  }
  return GradedIdeal(ring, std::move(pieces));
}

GradedIdeal GradedIdeal::truncated(int t, int up_to) const {
  if (t < 0 || t > top_degree()) {
    throw DegreeOutOfRange("truncation degree " + std::to_string(t));
  }
  std::vector<Echelon> pieces;
  for (int d = 0; d <= up_to; ++d) {
    if (d <= t) {
      pieces.push_back(piece(d));
    } else {
      pieces.push_back(multiply_by_linear_forms(pieces.back().form, ring_, d - 1));
    }
  }
  return GradedIdeal(ring_, std::move(pieces));
}

QMatrix catalecticant(const DualGenerator& F, int i) {
  const int s = F.socle_degree();
  if (i < 0 || i > s) {
    throw DegreeOutOfRange("catalecticant degree " + std::to_string(i) +
                           " outside 0.." + std::to_string(s));
  }
  const RingSpec ring = F.ring();
  const auto cols = monomial_basis(ring, i);
  const auto row_index = monomial_index(ring, s - i);
  QMatrix cat(row_index.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Poly image = diff_action(Poly::monomial(Alphabet::Operator, cols[c]), F.form());
    for (const auto& [m, coeff] : image.terms()) cat(row_index.at(m), c) = coeff;
  }
  return cat;
}

QMatrix annihilator_piece(const DualGenerator& F, int i) {
  const int s = F.socle_degree();
  if (i < 0 || i > s + 1) {
    throw DegreeOutOfRange("annihilator degree " + std::to_string(i) +
                           " outside 0.." + std::to_string(s + 1));
  }
  if (i == s + 1) {
    return QMatrix::identity(monomial_basis(F.ring(), i).size());
  }
  return kernel_basis(catalecticant(F, i));
}

HVector hilbert_function(const DualGenerator& F) {
  HVector h;
  for (int i = 0; i <= F.socle_degree(); ++i) {
    h.values.push_back(static_cast<long>(rank(catalecticant(F, i))));
  }
  return h;
}

bool is_nondegenerate(const DualGenerator& F) {
  if (F.socle_degree() == 0) return false;
  return rank(catalecticant(F, 1)) == static_cast<std::size_t>(F.nvars());
}

bool is_cone(const DualGenerator& F) {
  // In socle degree 0 every linear operator kills the constant F.
  if (F.socle_degree() == 0) return true;
  return rank(catalecticant(F, 1)) < static_cast<std::size_t>(F.nvars());
}

DualGenerator dual_generator_from_ideal(std::span<const Poly> gens, int s) {
  if (gens.empty()) throw InvalidArgument("empty generator list");
  if (s < 0) throw DegreeOutOfRange("negative socle degree");
  const RingSpec ring(gens.front().nvars());
  const auto source = monomial_basis(ring, s);
  QMatrix stacked(0, source.size());
  for (const auto& g : gens) {
    if (g.alphabet() != Alphabet::Operator) {
      throw MixedAlphabets("ideal generators live in the operator ring (x)");
    }
    if (g.nvars() != ring.n) throw DimensionMismatch("generators differ in n");
    const DegreeInfo d = g.degree();
    if (d.kind == DegreeInfo::Kind::Zero) continue;
    if (!d.homogeneous()) throw InvalidArgument("generator is not homogeneous: " + format(g));
    if (d.value > s) continue;  // acts as zero on R_s
    const auto target = monomial_index(ring, s - d.value);
    QMatrix block(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
      const Poly image = diff_action(g, Poly::monomial(Alphabet::Dual, source[c]));
      for (const auto& [m, coeff] : image.terms()) block(target.at(m), c) = coeff;
    }
    stacked = vstack(stacked, block);
  }
  const QMatrix kernel = kernel_basis(stacked);
  if (kernel.rows() != 1) {
    throw NotGorensteinSocle(
        kernel.rows(), "joint kernel in degree " + std::to_string(s) + " has dimension " +
                           std::to_string(kernel.rows()) + " (expected 1)");
  }
  Poly F(Alphabet::Dual, ring.n);
  for (std::size_t c = 0; c < source.size(); ++c) F.add_term(source[c], kernel(0, c));
  F *= 1 / *F.leading_coefficient();
  return DualGenerator(std::move(F));
}

std::size_t minimal_generator_count(const DualGenerator& F, int j) {
  const int s = F.socle_degree();
  if (j < 1 || j > s + 1) {
    throw DegreeOutOfRange("generator degree " + std::to_string(j) + " outside 1.." +
                           std::to_string(s + 1));
  }
  const QMatrix here = annihilator_piece(F, j);
  const QMatrix below = annihilator_piece(F, j - 1);
  const Echelon products = multiply_by_linear_forms(below, F.ring(), j - 1);
  return here.rows() - products.pivots.size();
}

}  // namespace apolar
