#include "apolar/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "apolar/error.hpp"

namespace apolar {

RingSpec::RingSpec(int vars) : n(vars) {
  if (vars < 1) throw InvalidArgument("ring needs at least one variable");
}

std::string RingSpec::variable_name(Alphabet a, int index) const {
  return (a == Alphabet::Operator ? "x" : "X") + std::to_string(index + 1);
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw InvalidArgument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(n, 0)); }

Monomial Monomial::variable(int n, int index) {
  std::vector<int> e(n, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return Monomial(std::move(e));
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (int i = a.nvars() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Poly::Poly(Alphabet alphabet, int nvars) : alphabet_(alphabet), nvars_(nvars) {}

Poly Poly::constant(Alphabet alphabet, int nvars, const Rational& c) {
  Poly p(alphabet, nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Poly Poly::monomial(Alphabet alphabet, const Monomial& m, const Rational& c) {
  Poly p(alphabet, m.nvars());
  p.add_term(m, c);
  return p;
}

DegreeInfo Poly::degree() const {
  if (terms_.empty()) return {};
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return {DegreeInfo::Kind::Inhomogeneous, -1};
  }
  return {DegreeInfo::Kind::Homogeneous, d};
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> Poly::leading_coefficient() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw DimensionMismatch("monomial has wrong arity");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& other) const {
  if (alphabet_ != other.alphabet_) {
    throw MixedAlphabets("operands live in different alphabets");
  }
  if (nvars_ != other.nvars_) throw DimensionMismatch("operands differ in n");
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly p(a.alphabet_, a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.alphabet_ == b.alphabet_ && a.nvars_ == b.nvars_ &&
         a.terms_ == b.terms_;
}

std::string Poly::to_string() const { return format(*this); }

std::string format(const Poly& p) {
  if (p.is_zero()) return "0";
  const RingSpec ring(p.nvars());
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational magnitude = abs(c);
    if (sgn(c) < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    first = false;

    std::string vars;
    for (int i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += ring.variable_name(p.alphabet(), i);
      if (m[i] > 1) vars += '^' + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += vars;
    } else {
      out += magnitude.get_str() + '*' + vars;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingSpec& ring, Alphabet fallback)
      : text_(text), ring_(ring), fallback_(fallback) {}

  Poly parse_poly() {
    std::vector<std::pair<Monomial, Rational>> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      terms.emplace_back(std::move(m), c * sign);
      skip_ws();
      if (at_end()) break;
    }
    Poly p(alphabet_.value_or(fallback_), ring_.n);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
  }

  std::size_t position() const { return pos_; }

 private:
  std::pair<Monomial, Rational> parse_term() {
    skip_ws();
    std::vector<int> exps(ring_.n, 0);
    Rational coeff = 1;
    bool any_factor = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= parse_number();
      } else if (ch == 'x' || ch == 'X' || ch == 'y') {
        parse_variable(exps);
      } else {
        break;
      }
      any_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end()) fail("dangling '*'");
        continue;
      }
      // juxtaposition: another factor may follow directly
      if (!at_end() && (peek() == 'x' || peek() == 'X' || peek() == 'y' ||
                        std::isdigit(static_cast<unsigned char>(peek())))) {
        continue;
      }
      break;
    }
    if (!any_factor) fail("expected a coefficient or variable");
    return {Monomial(std::move(exps)), coeff};
  }

  Rational parse_number() {
    Integer num = parse_digits();
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected denominator");
      const std::size_t at = pos_;
      Integer den = parse_digits();
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  Integer parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void parse_variable(std::vector<int>& exps) {
    const std::size_t start = pos_;
    const char ch = peek();
    const Alphabet a = ch == 'x' ? Alphabet::Operator : Alphabet::Dual;
    if (alphabet_ && *alphabet_ != a) {
      throw MixedAlphabets("position " + std::to_string(start) +
                           ": operator (x) and dual (X/y) variables mixed");
    }
    alphabet_ = a;
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected variable index after '" + std::string(1, ch) + "'");
    const Integer idx = parse_digits();
    if (idx < 1 || idx > ring_.n) {
      pos_ = start;
      fail("variable index out of range 1.." + std::to_string(ring_.n));
    }
    int power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected exponent");
      const Integer e = parse_digits();
      if (e > 1000) fail("exponent too large");
      power = static_cast<int>(e.get_si());
    }
    exps[idx.get_si() - 1] += power;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  std::string_view text_;
  const RingSpec& ring_;
  Alphabet fallback_;
  std::optional<Alphabet> alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse(std::string_view text, const RingSpec& ring, Alphabet fallback) {
  Parser p(text, ring, fallback);
  return p.parse_poly();
}

std::vector<Poly> parse_list(std::string_view text, const RingSpec& ring,
                             Alphabet fallback) {
  std::vector<Poly> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    try {
      out.push_back(parse(piece, ring, fallback));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), e.message());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

RingSpec infer_ring(std::string_view text) {
  int n = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch != 'x' && ch != 'X' && ch != 'y') continue;
    std::size_t j = i + 1;
    int idx = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) &&
           idx < 100000) {
      idx = idx * 10 + (text[j] - '0');
      ++j;
    }
    n = std::max(n, idx);
    i = j - 1;
  }
  if (n == 0) throw ParseError(0, "no variables found to infer the ring");
  return RingSpec(n);
}

Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly diff_action(const Poly& p, const Poly& F) {
  if (p.alphabet() != Alphabet::Operator || F.alphabet() != Alphabet::Dual) {
    throw MixedAlphabets("diff_action needs an operator in S acting on R");
  }
  if (p.nvars() != F.nvars()) throw DimensionMismatch("diff_action: rings differ");
  const int n = F.nvars();
  Poly out(Alphabet::Dual, n);
  std::vector<int> e(n);
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : F.terms()) {
      if (!a.divides(b)) continue;
      Integer scalar = 1;
      for (int i = 0; i < n; ++i) {
        e[i] = b[i] - a[i];
        for (int k = b[i]; k > e[i]; --k) scalar *= k;  // falling factorial
      }
      out.add_term(Monomial(e), ca * cb * Rational(scalar));
    }
  }
  return out;
}

std::vector<Monomial> monomial_basis(const RingSpec& ring, int d) {
  if (d < 0) throw DegreeOutOfRange("negative degree " + std::to_string(d));
  std::vector<Monomial> out;
  std::vector<int> e(ring.n, 0);
  // distribute d among the first k variables recursively
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == ring.n - 1) {
      e[var] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrevlexDescending{});
  return out;
}

std::map<Monomial, std::size_t, GrevlexDescending> monomial_index(
    const RingSpec& ring, int d) {
  std::map<Monomial, std::size_t, GrevlexDescending> idx;
  const auto basis = monomial_basis(ring, d);
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

Rational evaluate(const Poly& p, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != p.nvars()) {
    throw DimensionMismatch("evaluate: point has " + std::to_string(point.size()) +
                            " coordinates, ring has " + std::to_string(p.nvars()));
  }
  Rational total = 0;
  Rational term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (int i = 0; i < m.nvars() && sgn(term) != 0; ++i) {
      for (int k = 0; k < m[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace apolar
