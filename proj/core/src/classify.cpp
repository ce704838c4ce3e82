#include "apolar/classify.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "apolar/error.hpp"
#include "apolar/exactla.hpp"
#include "apolar/polyring.hpp"

namespace apolar {

namespace {

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::pair<int, int> mirror(std::pair<int, int> ij, int n, int s) {
  return {n - ij.first, n + s - ij.second};
}

}  // namespace

// ---------------------------------------------------------------------------

CIDegrees::CIDegrees(std::vector<int> d) : degrees(std::move(d)) {
  if (degrees.empty()) throw InvalidArgument("complete intersection needs n >= 1");
  for (int x : degrees) {
    if (x < 2) throw InvalidArgument("complete intersection degrees must be >= 2");
  }
  std::sort(degrees.begin(), degrees.end());
}

int CIDegrees::socle_degree() const {
  int sum = 0;
  for (int d : degrees) sum += d;
  return sum - nvars();
}

std::string CIDegrees::to_string() const { return join(degrees); }

std::vector<CIDegrees> enumerate_ci_degrees(int n, int s) {
  if (n < 1 || s < 1) throw InvalidArgument("enumerate_ci_degrees needs n >= 1 and s >= 1");
  std::vector<CIDegrees> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int min_d) -> void {
    const int left = n - static_cast<int>(cur.size());
    if (left == 0) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    for (int d = min_d; d * left <= remaining; ++d) {
      cur.push_back(d);
      self(self, remaining - d, d);
      cur.pop_back();
    }
  };
  rec(rec, s + n, 2);
  return out;
}

BettiTable koszul_betti_from_degrees(const CIDegrees& D) {
  const int n = D.nvars();
  BettiTable b(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int i = 0;
    int j = 0;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) {
        ++i;
        j += D.degrees[k];
      }
    }
    b.set(i, j, b.get(i, j) + 1);
  }
  return b;
}

HVector hvector_from_ci_degrees(const CIDegrees& D, int n) {
  if (D.nvars() != n) {
    throw DimensionMismatch("CI degrees have length " + std::to_string(D.nvars()) +
                            ", expected " + std::to_string(n));
  }
  // prod (1 - T^d) / (1 - T) = prod (1 + T + ... + T^{d-1})
  std::vector<long> h{1};
  for (int d : D.degrees) {
    std::vector<long> next(h.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t a = 0; a < h.size(); ++a)
      for (int k = 0; k < d; ++k) next[a + static_cast<std::size_t>(k)] += h[a];
    h = std::move(next);
  }
  return HVector{std::move(h)};
}

CIReport classify_ci(int n, int s) {
  CIReport r;
  r.n = n;
  r.s = s;
  r.degrees = enumerate_ci_degrees(n, s);
  for (const auto& D : r.degrees) {
    r.tables.push_back(koszul_betti_from_degrees(D));
    r.hvectors.push_back(hvector_from_ci_degrees(D, n));
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::string> BettiTemplate::names() const {
  std::vector<std::string> out;
  for (const auto& [ij, name] : unknowns) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

BettiTable BettiTemplate::instantiate(const std::map<std::string, long>& values) const {
  BettiTable b(n);
  for (const auto& [ij, v] : fixed) b.set(ij.first, ij.second, v);
  for (const auto& [ij, name] : unknowns) {
    auto it = values.find(name);
    if (it == values.end()) throw InvalidArgument("no value for unknown '" + name + "'");
    b.set(ij.first, ij.second, it->second);
  }
  return b;
}

bool BettiTemplate::is_symmetric() const {
  for (const auto& [ij, v] : fixed) {
    auto it = fixed.find(mirror(ij, n, s));
    if (it == fixed.end() || it->second != v) return false;
  }
  for (const auto& [ij, name] : unknowns) {
    auto it = unknowns.find(mirror(ij, n, s));
    if (it == unknowns.end() || it->second != name) return false;
  }
  return true;
}

namespace {

// Fills a symmetric template from the displayed upper rows: row r holds the
// cells (i, i + r) for i = 1..3. Numbers are fixed, letters are unknowns.
BettiTemplate symmetric_template(const std::vector<std::vector<std::string>>& rows) {
  BettiTemplate t;
  auto put = [&](std::pair<int, int> ij, const std::string& cell) {
    if (cell == ".") return;
    if (std::isdigit(static_cast<unsigned char>(cell[0]))) {
      t.fixed[ij] = std::stol(cell);
    } else {
      t.unknowns[ij] = cell;
    }
  };
  put({0, 0}, "1");
  put({4, 9}, "1");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int i = static_cast<int>(c) + 1;
      const std::pair<int, int> ij{i, i + static_cast<int>(r) + 1};
      put(ij, rows[r][c]);
      put(mirror(ij, t.n, t.s), rows[r][c]);
    }
  }
  return t;
}

}  // namespace

BettiTemplate k4_template() {
  return symmetric_template({{"6", "b", "c"}, {"d", "e", "f"}});
}

BettiTemplate equigenerated_quadric_template() {
  return symmetric_template({{"a", "b", "."}, {".", "e", "."}});
}

BettiTemplate equigenerated_cubic_template() {
  return symmetric_template({{".", ".", "."}, {"d", "e", "."}});
}

// ---------------------------------------------------------------------------

std::vector<std::vector<long>> bounded_integer_solutions(const QMatrix& A,
                                                         const std::vector<Rational>& rhs,
                                                         long bound) {
  if (rhs.size() != A.rows()) throw DimensionMismatch("right-hand side length");
  if (bound < 0) throw InvalidArgument("negative search bound");
  const std::size_t m = A.cols();
  QMatrix aug(A.rows(), m + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < m; ++c) aug(r, c) = A(r, c);
    aug(r, m) = rhs[r];
  }
  const Echelon E = rref(aug);
  if (!E.pivots.empty() && E.pivots.back() == m) return {};

  std::vector<bool> is_pivot(m, false);
  for (auto p : E.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m; ++c)
    if (!is_pivot[c]) free.push_back(c);

  std::vector<std::vector<long>> out;
  std::vector<long> x(m, 0);
  std::vector<long> odometer(free.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < free.size(); ++k) x[free[k]] = odometer[k];
    bool ok = true;
    for (std::size_t r = 0; r < E.pivots.size() && ok; ++r) {
      Rational v = E.form(r, m);
      for (auto c : free) v -= E.form(r, c) * x[c];
      if (v.get_den() != 1 || v < 0 || v > bound) {
        ok = false;
      } else {
        x[E.pivots[r]] = v.get_num().get_si();
      }
    }
    if (ok) out.push_back(x);
    std::size_t k = free.size();
    while (k > 0 && odometer[k - 1] == bound) odometer[--k] = 0;
    if (k == 0) break;
    ++odometer[k - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

EquigeneratedReport classify_equigenerated(long bound) {
  constexpr int n = 4;
  EquigeneratedReport r;
  r.bound = bound;

  // Quadric-generated: h_d = C(3+d, d) - dim I_d for d = 2..5 with
  // H = (1,4,k,k,4,1), unknowns (k, a, b, e).
  const QMatrix A{{1, 1, 0, 0}, {1, 4, -1, 0}, {0, 10, -4, -1}, {0, 20, -10, -5}};
  const std::vector<Rational> rhs{10, 20, 31, 55};
  for (const auto& x : bounded_integer_solutions(A, rhs, bound)) {
    r.quadric_solutions.push_back({x[0], x[1], x[2], x[3]});
    const long a = x[1];
    if (a == n) {
      // n quadrics in n variables cutting out an Artinian ring form a CI
      const CIDegrees D(std::vector<int>(n, 2));
      r.excluded_ci = D;
      r.excluded_ci_table = koszul_betti_from_degrees(D);
      r.quadric_exclusions.push_back("a = " + std::to_string(a) +
                                     " quadrics form a complete intersection with D = " +
                                     D.to_string() + ", socle degree " +
                                     std::to_string(D.socle_degree()) + " != 5");
    } else {
      r.quadric_exclusions.emplace_back();
    }
  }

  // Cubic-generated: no quadrics, so h_2 = C(n+1, 2) = k.
  const long k = binomial(n + 1, 2);
  r.d = binomial(n + 2, 3) - k;              // h_3 = 20 - d = k
  r.e = 4 - binomial(n + 3, 4) + n * r.d;    // h_4 = 35 - (4d - e) = 4
  r.hvector = HVector{{1, n, k, k, n, 1}};
  const BettiTable t = equigenerated_cubic_template().instantiate({{"d", r.d}, {"e", r.e}});
  if (betti_symmetry_check(t, 5) && hilbert_from_betti(t) == r.hvector) r.table = t;
  return r;
}

// ---------------------------------------------------------------------------

const std::array<K4ConstraintInfo, kK4ConstraintCount>& k4_constraints() {
  static const std::array<K4ConstraintInfo, kK4ConstraintCount> info{{
      {K4Constraint::DegreeThree, "degree3",
       "h_3(A) = 20 - 6*4 - d + b = 4, so b = d + 8"},
      {K4Constraint::DegreeFour, "degree4",
       "h_4(A) = 35 - 6*10 - 4d - f + 4b + e - c = 4, so c - e + f = 3"},
      {K4Constraint::MacaulayJ2, "macaulay-j2",
       "Macaulay on S/J_2: h_3(S/J_2) = 20 - 6*4 + b <= 4^<2> = 5"},
      {K4Constraint::GotzmannJ2, "gotzmann-j2",
       "Gotzmann on S/J_2: if h_3(S/J_2) = 4^<2> then h_4(S/J_2) = 6 and "
       "c = b_24(S/J_2) + 35 - 60 + 4b - 6 >= 4b - 31"},
      {K4Constraint::MacaulayJ3, "macaulay-j3",
       "Macaulay on S/J_3: h_4(S/J_3) = 35 - 60 - 4d + 4b + e - c <= 4^<3> = 5"},
      {K4Constraint::FBound, "f-bound", "f <= 1 (from c >= 2 + e and c - e + f = 3)"},
      {K4Constraint::MacaulayJ4, "macaulay-j4",
       "Macaulay on S/J_4: h_5(S/J_4) = 56 - 120 - 10d - 4f + 10b + 4e + e - 4c - f "
       "<= 4^<4> = 4"},
      {K4Constraint::MacaulayJ2Degree4, "macaulay-j2-degree4",
       "if d = 0, Macaulay on S/J_2 in degree 4: with h_4 = 35 - 60 + 4b + e - c >= 0, "
       "56 - 120 + 10b + 4e - 4c - f <= h_5(S/J_2) <= h_4^<4>"},
  }};
  return info;
}

std::optional<K4Constraint> parse_k4_constraint(const std::string& name) {
  for (const auto& c : k4_constraints())
    if (c.name == name) return c.id;
  return std::nullopt;
}

std::string K4Tuple::to_string() const { return join(std::vector<long>{b, c, d, e, f}); }

K4Report classify_k4(long bound, const std::set<K4Constraint>& disabled) {
  if (bound < 10) throw InvalidArgument("classify_k4 needs search bound >= 10");
  K4Report report;
  report.bound = bound;
  std::array<bool, kK4ConstraintCount> on{};
  for (int k = 0; k < kK4ConstraintCount; ++k) {
    on[k] = !disabled.contains(static_cast<K4Constraint>(k));
    report.log.push_back({static_cast<K4Constraint>(k), on[k], 0, std::nullopt});
  }
  const long mb2 = macaulay_bound(4, 2);
  const long g22 = gotzmann_growth(4, 2, 2);
  const long mb3 = macaulay_bound(4, 3);
  const long mb4 = macaulay_bound(4, 4);

  // Returns the index of the first violated enabled constraint, or -1.
  auto first_violation = [&](long b, long c, long d, long e, long f) -> int {
    if (on[0] && b != d + 8) return 0;
    if (on[1] && c - e + f != 3) return 1;
    const long h3_j2 = 20 - 24 + b;
    if (on[2] && h3_j2 > mb2) return 2;
    if (on[3] && h3_j2 == mb2 && c < 35 - 60 + 4 * b - g22) return 3;
    if (on[4] && 35 - 60 - 4 * d + 4 * b + e - c > mb3) return 4;
    if (on[5] && f > 1) return 5;
    if (on[6] && 56 - 120 - 10 * d - 4 * f + 10 * b + 4 * e + e - 4 * c - f > mb4) return 6;
    if (on[7] && d == 0) {
      const long h4_j2 = 35 - 60 + 4 * b + e - c;
      if (h4_j2 < 0) return 7;
      if (56 - 120 + 10 * b + 4 * e - 4 * c - f > macaulay_bound(h4_j2, 4)) return 7;
    }
    return -1;
  };

  for (long b = 0; b <= bound; ++b)
    for (long c = 0; c <= bound; ++c)
      for (long d = 0; d <= bound; ++d)
        for (long e = 0; e <= bound; ++e)
          for (long f = 0; f <= bound; ++f) {
            ++report.examined;
            const int v = first_violation(b, c, d, e, f);
            if (v < 0) {
              report.survivors.push_back({b, c, d, e, f});
              continue;
            }
            auto& entry = report.log[static_cast<std::size_t>(v)];
            if (entry.eliminated++ == 0) entry.first = K4Tuple{b, c, d, e, f};
          }
  return report;
}

BettiTable k4_table(const K4Tuple& t) {
  return k4_template().instantiate({{"b", t.b}, {"c", t.c}, {"d", t.d}, {"e", t.e}, {"f", t.f}});
}

// ---------------------------------------------------------------------------

bool betti_leq(const BettiTable& b1, const BettiTable& b2) {
  if (b1.nvars() != b2.nvars()) throw DimensionMismatch("Betti tables over different rings");
  for (const auto& [ij, v] : b1.entries()) {
    if (v > b2.get(ij.first, ij.second)) return false;
  }
  return true;
}

bool TablesReport::all_consistent() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TableCheck& c) { return c.symmetric && c.hilbert_consistent; });
}

TablesReport check_tables(const std::vector<ConjecturedTable>& tables, const HVector& expected) {
  TablesReport r;
  r.expected = expected;
  const int s = static_cast<int>(expected.size()) - 1;
  for (const auto& t : tables) {
    TableCheck c;
    c.label = t.label;
    c.symmetric = betti_symmetry_check(t.table, s);
    try {
      c.hvector = hilbert_from_betti(t.table);
      c.hilbert_consistent = (*c.hvector == expected);
    } catch (const InconsistentTable&) {
      c.hilbert_consistent = false;
    }
    r.checks.push_back(std::move(c));
  }
  const std::size_t m = tables.size();
  r.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) r.leq[a][b] = betti_leq(tables[a].table, tables[b].table);

  r.reflexive = true;
  r.antisymmetric = true;
  r.transitive = true;
  for (std::size_t a = 0; a < m; ++a) {
    r.reflexive = r.reflexive && r.leq[a][a];
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && r.leq[a][b] && r.leq[b][a] && !(tables[a].table == tables[b].table)) {
        r.antisymmetric = false;
      }
      for (std::size_t c = 0; c < m; ++c) {
        if (r.leq[a][b] && r.leq[b][c] && !r.leq[a][c]) r.transitive = false;
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !r.leq[a][b] || r.leq[b][a]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < m && covered; ++c) {
        if (c == a || c == b) continue;
        if (r.leq[a][c] && !r.leq[c][a] && r.leq[c][b] && !r.leq[b][c]) covered = false;
      }
      if (covered) r.hasse.emplace_back(a, b);
    }
  }
  return r;
}

TablesReport check_conjectured_tables() {
  return check_tables(conjectured_tables(), HVector{{1, 4, 7, 7, 4, 1}});
}

// ---------------------------------------------------------------------------

std::string to_text(const CIReport& r) {
  std::ostringstream out;
  out << "complete intersections, n = " << r.n << ", s = " << r.s << ": " << r.degrees.size()
      << " degree sequence(s)\n";
  for (std::size_t k = 0; k < r.degrees.size(); ++k) {
    out << "\nD = " << r.degrees[k].to_string() << "\nH = " << r.hvectors[k].to_string()
        << "\n"
        << render_betti(r.tables[k]);
  }
  return out.str();
}

std::string to_text(const EquigeneratedReport& r) {
  std::ostringstream out;
  out << "equigenerated ideals, n = 4, s = 5 (search bound " << r.bound << ")\n\n";
  out << "quadric template: solutions (k,a,b,e) of\n"
      << "  k = 10 - a\n  k = 20 - 4a + b\n  4 = 35 - 10a + 4b + e\n"
      << "  1 = 56 - 20a + 10b + 5e\n";
  if (r.quadric_solutions.empty()) out << "  none\n";
  for (std::size_t k = 0; k < r.quadric_solutions.size(); ++k) {
    const auto& x = r.quadric_solutions[k];
    out << "  (" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << "): "
        << (r.quadric_exclusions[k].empty() ? "survives" : "excluded, " + r.quadric_exclusions[k])
        << '\n';
  }
  if (r.excluded_ci_table) out << render_betti(*r.excluded_ci_table);
  out << "\ncubic template: d = " << r.d << ", e = " << r.e << ", H = " << r.hvector.to_string()
      << '\n';
  if (r.table) {
    out << render_betti(*r.table);
  } else {
    out << "  no consistent table\n";
  }
  return out.str();
}

std::string to_text(const K4Report& r) {
  std::ostringstream out;
  out << "H = (1,4,4,4,4,1): unknowns (b,c,d,e,f) in [0," << r.bound << "]^5, " << r.examined
      << " tuples\n";
  for (const auto& entry : r.log) {
    const auto& info = k4_constraints()[static_cast<std::size_t>(entry.constraint)];
    out << "  " << info.name << (entry.enabled ? "" : " (disabled)") << ": " << info.statement
        << "\n    eliminated " << entry.eliminated;
    if (entry.first) out << ", first " << entry.first->to_string();
    out << '\n';
  }
  out << "survivors: " << r.survivors.size() << '\n';
  for (const auto& t : r.survivors) out << "  " << t.to_string() << '\n';
  if (r.survivors.size() == 1) out << render_betti(k4_table(r.survivors.front()));
  return out.str();
}

std::string to_text(const TablesReport& r, const std::vector<ConjecturedTable>& tables) {
  std::ostringstream out;
  out << "candidate tables for H = " << r.expected.to_string() << '\n';
  for (std::size_t k = 0; k < r.checks.size(); ++k) {
    const auto& c = r.checks[k];
    out << '\n'
        << c.label << ": totals " << join(tables[k].table.totals()) << ", symmetric "
        << (c.symmetric ? "yes" : "no") << ", H "
        << (c.hvector ? c.hvector->to_string() : std::string("inconsistent"))
        << (c.hilbert_consistent ? " (matches)" : " (mismatch)") << '\n'
        << render_betti(tables[k].table);
  }
  out << "\nposet under entrywise order: reflexive " << (r.reflexive ? "yes" : "no")
      << ", antisymmetric " << (r.antisymmetric ? "yes" : "no") << ", transitive "
      << (r.transitive ? "yes" : "no") << "\ncovering relations:\n";
  if (r.hasse.empty()) out << "  none\n";
  for (const auto& [a, b] : r.hasse) {
    out << "  " << r.checks[a].label << " < " << r.checks[b].label << '\n';
  }
  return out.str();
}

}  // namespace apolar
