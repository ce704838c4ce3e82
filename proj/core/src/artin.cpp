#include "apolar/artin.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>

#include "apolar/error.hpp"

namespace apolar {

LinearForm LinearForm::all_ones(int n) {
  return LinearForm{std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))};
}

bool LinearForm::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

Poly LinearForm::to_poly() const {
  const int n = nvars();
  Poly p(Alphabet::Operator, n);
  for (int i = 0; i < n; ++i) p.add_term(Monomial::variable(n, i), coefficients[i]);
  return p;
}

std::string LinearForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out += ',';
    out += coefficients[i].get_str();
  }
  return out;
}

LinearForm parse_linear_form(const std::string& text) {
  LinearForm l;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
    std::erase_if(piece, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    Rational q;
    if (piece.empty() || q.set_str(piece, 10) != 0) {
      throw ParseError(start, "expected a rational coefficient, got '" + piece + "'");
    }
    if (q.get_den() == 0) throw ParseError(start, "zero denominator");
    q.canonicalize();
    l.coefficients.push_back(q);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return l;
}

ArtinAlgebra::ArtinAlgebra(DualGenerator F)
    : F_(std::move(F)), ideal_(GradedIdeal::annihilator(F_)) {
  const int s = F_.socle_degree();
  const RingSpec ring = F_.ring();
  for (int d = 0; d <= s; ++d) {
    const auto monomials = monomial_basis(ring, d);
    const Echelon& piece = ideal_.piece(d);
    std::vector<bool> pivot(monomials.size(), false);
    for (auto p : piece.pivots) pivot[p] = true;
    std::vector<Monomial> basis;
    std::vector<std::size_t> positions;
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      if (pivot[c]) continue;
      basis.push_back(monomials[c]);
      positions.push_back(c);
    }
    hilbert_.values.push_back(static_cast<long>(basis.size()));
    bases_.push_back(std::move(basis));
    basis_positions_.push_back(std::move(positions));
  }

  structure_.resize(static_cast<std::size_t>(s));
  for (int d = 0; d < s; ++d) {
    const auto target = monomial_index(ring, d + 1);
    for (int var = 0; var < ring.n; ++var) {
      const Monomial x = Monomial::variable(ring.n, var);
      const auto& src = bases_[d];
      QMatrix m(bases_[d + 1].size(), src.size());
      std::vector<Rational> v(target.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        std::fill(v.begin(), v.end(), Rational(0));
        v[target.at(src[c] * x)] = 1;
        const auto reduced = reduce_by_echelon(ideal_.piece(d + 1), v);
        const auto& pos = basis_positions_[d + 1];
        for (std::size_t r = 0; r < pos.size(); ++r) m(r, c) = reduced[pos[r]];
      }
      structure_[d].push_back(std::move(m));
    }
  }
}

const std::vector<Monomial>& ArtinAlgebra::basis(int d) const {
  if (d < 0 || d > socle_degree()) {
    throw DegreeOutOfRange("A_" + std::to_string(d) + " is outside 0.." +
                           std::to_string(socle_degree()));
  }
  return bases_[static_cast<std::size_t>(d)];
}

const QMatrix& ArtinAlgebra::structure(int var, int d) const {
  if (d < 0 || d >= socle_degree()) {
    throw DegreeOutOfRange("structure map from degree " + std::to_string(d));
  }
  if (var < 0 || var >= nvars()) throw DimensionMismatch("variable index");
  return structure_[static_cast<std::size_t>(d)][static_cast<std::size_t>(var)];
}

std::vector<Rational> ArtinAlgebra::reduce(const Poly& p) const {
  if (p.is_zero()) throw InvalidArgument("reduce: zero polynomial has no degree");
  const DegreeInfo deg = p.degree();
  if (!deg.homogeneous()) throw InvalidArgument("reduce: polynomial not homogeneous");
  const int d = deg.value;
  if (d > socle_degree()) return {};
  const auto reduced = reduce_by_echelon(ideal_.piece(d), coordinates(p, F_.ring(), d));
  const auto& pos = basis_positions_[static_cast<std::size_t>(d)];
  std::vector<Rational> out;
  out.reserve(pos.size());
  for (auto c : pos) out.push_back(reduced[c]);
  return out;
}

std::size_t ArtinAlgebra::offset(int d) const {
  std::size_t off = 0;
  for (int e = 0; e < d; ++e) off += bases_[static_cast<std::size_t>(e)].size();
  return off;
}

ArtinAlgebra build_algebra(const DualGenerator& F) { return ArtinAlgebra(F); }

namespace {

void check_form(const ArtinAlgebra& A, const LinearForm& l) {
  if (l.nvars() != A.nvars()) {
    throw DimensionMismatch("linear form has " + std::to_string(l.nvars()) +
                            " coefficients, ring has " + std::to_string(A.nvars()));
  }
}

QMatrix step_map(const ArtinAlgebra& A, const LinearForm& l, int d) {
  QMatrix m(A.basis(d + 1).size(), A.basis(d).size());
  for (int v = 0; v < A.nvars(); ++v) {
    if (sgn(l.coefficients[v]) == 0) continue;
    m = m + l.coefficients[v] * A.structure(v, d);
  }
  return m;
}

}  // namespace

QMatrix mult_map(const ArtinAlgebra& A, const LinearForm& l, int i, int k) {
  check_form(A, l);
  const int s = A.socle_degree();
  if (i < 0 || k < 0 || i + k > s) {
    throw DegreeOutOfRange("multiplication map from degree " + std::to_string(i) +
                           " by power " + std::to_string(k) + " leaves 0.." +
                           std::to_string(s));
  }
  QMatrix m = QMatrix::identity(A.basis(i).size());
  for (int d = i; d < i + k; ++d) m = step_map(A, l, d) * m;
  return m;
}

bool has_wlp_at(const ArtinAlgebra& A, const LinearForm& l) {
  check_form(A, l);
  if (l.is_zero()) throw ZeroForm("WLP test needs a nonzero linear form");
  const auto& h = A.hilbert();
  for (int i = 0; i < A.socle_degree(); ++i) {
    const auto expected = static_cast<std::size_t>(std::min(h[i], h[i + 1]));
    if (rank(mult_map(A, l, i, 1)) != expected) return false;
  }
  return true;
}

bool has_slp_at(const ArtinAlgebra& A, const LinearForm& l) {
  check_form(A, l);
  if (l.is_zero()) throw ZeroForm("SLP test needs a nonzero linear form");
  const int s = A.socle_degree();
  for (int i = 0; i <= s / 2; ++i) {
    const QMatrix m = mult_map(A, l, i, s - 2 * i);
    if (rank(m) != m.cols() || m.rows() != m.cols()) return false;
  }
  return true;
}

QMatrix total_operator(const ArtinAlgebra& A, const LinearForm& l) {
  check_form(A, l);
  const auto n = static_cast<std::size_t>(A.dimension());
  QMatrix T(n, n);
  for (int d = 0; d < A.socle_degree(); ++d) {
    const QMatrix block = step_map(A, l, d);
    const std::size_t row0 = A.offset(d + 1);
    const std::size_t col0 = A.offset(d);
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c) T(row0 + r, col0 + c) = block(r, c);
  }
  return T;
}

Partition jordan_type(const ArtinAlgebra& A, const LinearForm& l) {
  check_form(A, l);
  if (l.is_zero()) throw ZeroForm("Jordan type needs a nonzero linear form");
  const QMatrix T = total_operator(A, l);
  const int s = A.socle_degree();
  // r[k] = rank T^k for k = 0..s+2; T^{s+1} = 0.
  std::vector<long> r{static_cast<long>(T.rows())};
  QMatrix power = QMatrix::identity(T.rows());
  for (int k = 1; k <= s + 2; ++k) {
    power = T * power;
    r.push_back(static_cast<long>(rank(power)));
  }
  std::vector<long> parts;
  for (int k = 1; k <= s + 1; ++k) {
    const long count = r[k - 1] - 2 * r[k] + r[k + 1];
    for (long c = 0; c < count; ++c) parts.push_back(k);
  }
  return Partition(std::move(parts));
}

Partition hvector_partition(const HVector& h) { return Partition(h.values); }

LinearForm candidate_form(int n, std::uint64_t seed, int index, int bound) {
  if (index == 0) return LinearForm::all_ones(n);
  if (bound < 1) throw InvalidArgument("coefficient bound must be at least 1");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  // uniform_int_distribution is not portable across standard libraries
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  auto draw = [&]() -> long {
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return static_cast<long>(x % range) - bound;
  };
  LinearForm l;
  do {
    l.coefficients.clear();
    for (int i = 0; i < n; ++i) l.coefficients.emplace_back(draw());
  } while (l.is_zero());
  return l;
}

LefschetzProbe probe_lefschetz(const ArtinAlgebra& A, const ProbeOptions& opts) {
  if (opts.trials < 1) throw InvalidArgument("probe needs at least one trial");
  LefschetzProbe probe;
  for (int t = 0; t < opts.trials; ++t) {
    ProbeTrial trial;
    trial.form = candidate_form(A.nvars(), opts.seed, t, opts.coeff_bound);
    trial.wlp = has_wlp_at(A, trial.form);
    trial.slp = has_slp_at(A, trial.form);
    if (trial.wlp && !probe.wlp_witness) probe.wlp_witness = trial.form;
    if (trial.slp && !probe.slp_witness) probe.slp_witness = trial.form;
    probe.trials.push_back(std::move(trial));
  }
  return probe;
}

}  // namespace apolar
