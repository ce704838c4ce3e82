#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/exactla.hpp"

namespace apolar {

/// Operator ring S = K[x_1..x_n] or dual ring R = K[X_1..X_n].
enum class Alphabet { Operator, Dual };

struct RingSpec {
  explicit RingSpec(int vars);

  int n;

  std::string variable_name(Alphabet a, int index) const;  // 0-based index
};

class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int n);
  static Monomial variable(int n, int index);

  int nvars() const noexcept { return static_cast<int>(exps_.size()); }
  int degree() const noexcept { return degree_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const int> exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Graded reverse lexicographic order with x1 > x2 > ... > xn.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_greater(a, b);
  }
};

struct DegreeInfo {
  enum class Kind { Zero, Homogeneous, Inhomogeneous };
  Kind kind = Kind::Zero;
  int value = -1;  // meaningful only when Homogeneous

  bool homogeneous() const noexcept { return kind == Kind::Homogeneous; }
};

/// Sparse polynomial with rational coefficients; terms are kept in
/// descending grevlex order and zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrevlexDescending>;

  Poly(Alphabet alphabet, int nvars);

  static Poly constant(Alphabet alphabet, int nvars, const Rational& c);
  static Poly monomial(Alphabet alphabet, const Monomial& m,
                       const Rational& c = 1);

  Alphabet alphabet() const noexcept { return alphabet_; }
  int nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  DegreeInfo degree() const;
  Rational coefficient(const Monomial& m) const;
  /// Coefficient of the grevlex-leading term; zero polynomial has none.
  std::optional<Rational> leading_coefficient() const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void check_compatible(const Poly& other) const;

  Alphabet alphabet_;
  int nvars_;
  Terms terms_;
};

/// Parses the polynomial grammar: integer or rational coefficients, optional
/// `*` between factors, `^` for powers, `+`/`-` between terms; variables
/// `x<i>` (operator ring), `X<i>` or `y<i>` (dual ring), 1-indexed, i <= n.
/// Text without variables is a constant in `fallback`.
Poly parse(std::string_view text, const RingSpec& ring,
           Alphabet fallback = Alphabet::Operator);

/// Comma-separated list of polynomials.
std::vector<Poly> parse_list(std::string_view text, const RingSpec& ring,
                             Alphabet fallback = Alphabet::Operator);

/// Smallest ring containing every variable index mentioned in `text`
/// (at least one variable).
RingSpec infer_ring(std::string_view text);

std::string format(const Poly& p);

Poly mul(const Poly& p, const Poly& q);

/// p(d/dX_1, ..., d/dX_n) applied to F, with true partial derivatives.
Poly diff_action(const Poly& p, const Poly& F);

/// All monomials of degree d in n variables, descending grevlex.
std::vector<Monomial> monomial_basis(const RingSpec& ring, int d);

/// Position of each monomial of degree d inside monomial_basis(ring, d).
std::map<Monomial, std::size_t, GrevlexDescending> monomial_index(
    const RingSpec& ring, int d);

Rational evaluate(const Poly& p, std::span<const Rational> point);

/// Binomial coefficient for small nonnegative arguments (0 when k > n or k<0).
long binomial(long n, long k);

}  // namespace apolar
