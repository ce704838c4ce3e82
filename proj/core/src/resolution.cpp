#include "apolar/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "apolar/error.hpp"

namespace apolar {

long BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long value) {
  if (value < 0) throw InvalidArgument("Betti numbers are nonnegative");
  if (i < 0 || i > n_) {
    throw DegreeOutOfRange("homological degree " + std::to_string(i) + " outside 0.." +
                           std::to_string(n_));
  }
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

std::vector<long> BettiTable::totals() const {
  std::vector<long> t(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [ij, b] : entries_) t[static_cast<std::size_t>(ij.first)] += b;
  return t;
}

int BettiTable::max_row() const {
  int r = 0;
  for (const auto& [ij, b] : entries_) r = std::max(r, ij.second - ij.first);
  return r;
}

BettiTable betti_from_rows(int n, const std::vector<std::vector<long>>& rows) {
  BettiTable b(n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() > static_cast<std::size_t>(n) + 1) {
      throw DimensionMismatch("row " + std::to_string(r) + " has too many columns");
    }
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      b.set(static_cast<int>(i), static_cast<int>(i + r), rows[r][i]);
    }
  }
  return b;
}

std::string render_betti(const BettiTable& b) {
  const int n = b.nvars();
  const int rows = b.max_row();
  const auto totals = b.totals();
  std::vector<std::size_t> width(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 0; i <= n; ++i) {
    width[i] = std::max(std::to_string(i).size(), std::to_string(totals[i]).size());
  }
  for (const auto& [ij, v] : b.entries()) {
    auto& w = width[static_cast<std::size_t>(ij.first)];
    w = std::max(w, std::to_string(v).size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  std::ostringstream out;
  out << pad("", 6);
  for (int i = 0; i <= n; ++i) out << ' ' << pad(std::to_string(i), width[i]);
  out << '\n' << "total:";
  for (int i = 0; i <= n; ++i) out << ' ' << pad(std::to_string(totals[i]), width[i]);
  out << '\n';
  for (int r = 0; r <= rows; ++r) {
    out << pad(std::to_string(r) + ":", 6);
    for (int i = 0; i <= n; ++i) {
      const long v = b.get(i, i + r);
      out << ' ' << pad(v ? std::to_string(v) : ".", width[i]);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// Subsets of {0..n-1} of size k, as sorted index lists, in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Koszul differential A_{j-i} (x) L^i -> A_{j-i+1} (x) L^{i-1} in strand j.
QMatrix koszul_differential(const ArtinAlgebra& A, int i, int j) {
  const int n = A.nvars();
  const int s = A.socle_degree();
  const int src_deg = j - i;
  const int dst_deg = j - i + 1;
  const auto src_sets = subsets(n, i);
  const auto dst_sets = subsets(n, i - 1);
  const std::size_t src_h = (src_deg >= 0 && src_deg <= s) ? A.basis(src_deg).size() : 0;
  const std::size_t dst_h = (dst_deg >= 0 && dst_deg <= s) ? A.basis(dst_deg).size() : 0;
  QMatrix d(dst_h * dst_sets.size(), src_h * src_sets.size());
  if (src_h == 0 || dst_h == 0) return d;

  std::map<std::vector<int>, std::size_t> dst_pos;
  for (std::size_t k = 0; k < dst_sets.size(); ++k) dst_pos.emplace(dst_sets[k], k);

  for (std::size_t t = 0; t < src_sets.size(); ++t) {
    const auto& T = src_sets[t];
    for (std::size_t pos = 0; pos < T.size(); ++pos) {
      std::vector<int> rest = T;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      const std::size_t target = dst_pos.at(rest);
      const Rational sign = (pos % 2 == 0) ? 1 : -1;
      const QMatrix& x = A.structure(T[pos], src_deg);
      for (std::size_t r = 0; r < dst_h; ++r)
        for (std::size_t c = 0; c < src_h; ++c)
          if (sgn(x(r, c)) != 0) d(target * dst_h + r, t * src_h + c) += sign * x(r, c);
    }
  }
  return d;
}

}  // namespace

KoszulStrand koszul_strand(const ArtinAlgebra& A, int j) {
  const int n = A.nvars();
  const int s = A.socle_degree();
  KoszulStrand strand;
  strand.degree = j;
  std::vector<long> ranks(static_cast<std::size_t>(n) + 2, 0);  // rank of d_i
  for (int i = 0; i <= n; ++i) {
    const int a = j - i;
    const long h = (a >= 0 && a <= s) ? A.hilbert()[static_cast<std::size_t>(a)] : 0;
    strand.chain_dims.push_back(h * binomial(n, i));
  }
  for (int i = 1; i <= n; ++i) {
    if (strand.chain_dims[i] == 0 || strand.chain_dims[i - 1] == 0) continue;
    ranks[i] = static_cast<long>(rank(koszul_differential(A, i, j)));
  }
  for (int i = 0; i <= n; ++i) {
    strand.homology_dims.push_back(strand.chain_dims[i] - ranks[i] - ranks[i + 1]);
  }
  return strand;
}

BettiTable betti_table(const ArtinAlgebra& A) {
  const int n = A.nvars();
  BettiTable b(n);
  for (int j = 0; j <= A.socle_degree() + n; ++j) {
    const KoszulStrand strand = koszul_strand(A, j);
    for (int i = 0; i <= n; ++i) b.set(i, j, strand.homology_dims[i]);
  }
  return b;
}

BettiTable betti_table(const DualGenerator& F) { return betti_table(ArtinAlgebra(F)); }

long hilbert_series_coefficient(const BettiTable& b, int d) {
  const int n = b.nvars();
  long total = 0;
  for (const auto& [ij, v] : b.entries()) {
    const auto [i, j] = ij;
    if (j > d) continue;
    const long sign = (i % 2 == 0) ? 1 : -1;
    total += sign * v * binomial(n - 1 + d - j, n - 1);
  }
  return total;
}

HVector hilbert_from_betti(const BettiTable& b) {
  int top = 0;
  for (const auto& [ij, v] : b.entries()) top = std::max(top, ij.second);
  std::vector<long> numerator(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& [ij, v] : b.entries()) {
    numerator[static_cast<std::size_t>(ij.second)] += (ij.first % 2 == 0) ? v : -v;
  }
  // synthetic division by (1 - T), n times
  for (int step = 0; step < b.nvars(); ++step) {
    std::vector<long> q;
    long carry = 0;
    for (long c : numerator) {
      carry += c;
      q.push_back(carry);
    }
    if (q.empty() || q.back() != 0) {
      throw InconsistentTable("alternating Betti sum is not divisible by (1-T)^" +
                              std::to_string(b.nvars()));
    }
    q.pop_back();
    numerator = std::move(q);
  }
  while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
  for (std::size_t d = 0; d < numerator.size(); ++d) {
    if (numerator[d] < 0) {
      throw InconsistentTable("negative Hilbert function value in degree " +
                              std::to_string(d));
    }
  }
  return HVector{std::move(numerator)};
}

HVector truncated_ideal_hilbert(const DualGenerator& F, int t, int up_to) {
  const int s = F.socle_degree();
  if (t < 1 || t > s + 1) {
    throw DegreeOutOfRange("truncation degree " + std::to_string(t) + " outside 1.." +
                           std::to_string(s + 1));
  }
  if (up_to < 0) throw DegreeOutOfRange("negative degree bound");
  const GradedIdeal J = GradedIdeal::annihilator(F).truncated(t, up_to);
  HVector h;
  for (int d = 0; d <= up_to; ++d) h.values.push_back(static_cast<long>(J.codim(d)));
  return h;
}

std::string MacaulayRep::to_string() const {
  std::string out;
  for (const auto& [top, bottom] : terms) {
    if (!out.empty()) out += " + ";
    out += "C(" + std::to_string(top) + "," + std::to_string(bottom) + ")";
  }
  return out.empty() ? "0" : out;
}

MacaulayRep macaulay_rep(long h, int i) {
  if (h < 0) throw InvalidArgument("Macaulay representation of a negative value");
  if (i < 1) throw DegreeOutOfRange("Macaulay representation needs degree >= 1");
  MacaulayRep rep{i, h, {}};
  long rest = h;
  for (int k = i; k >= 1 && rest > 0; --k) {
    long a = k;
    while (binomial(a + 1, k) <= rest) ++a;
    rep.terms.emplace_back(a, k);
    rest -= binomial(a, k);
  }
  return rep;
}

long macaulay_bound(long h, int i) {
  long bound = 0;
  for (const auto& [a, k] : macaulay_rep(h, i).terms) bound += binomial(a + 1, k + 1);
  return bound;
}

std::vector<MacaulayViolation> check_macaulay(const HVector& h) {
  std::vector<MacaulayViolation> out;
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    const long bound = macaulay_bound(h[i], static_cast<int>(i));
    if (h[i + 1] > bound) {
      out.push_back({static_cast<int>(i + 1), h[i + 1], bound});
    }
  }
  return out;
}

long gotzmann_growth(long h, int t, int j) {
  if (j < 0) throw InvalidArgument("Gotzmann growth needs j >= 0");
  long total = 0;
  for (const auto& [a, k] : macaulay_rep(h, t).terms) total += binomial(a + j, k + j);
  return total;
}

bool betti_symmetry_check(const BettiTable& b, int s) {
  const int n = b.nvars();
  for (const auto& [ij, v] : b.entries()) {
    if (b.get(n - ij.first, n + s - ij.second) != v) return false;
  }
  return true;
}

}  // namespace apolar
