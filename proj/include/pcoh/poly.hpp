#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcoh {

using Rational = mpq_class;

// Parses "n", "-n", "n/m"; throws InputError on bad syntax or zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
// n/m in lowest terms; m != 0 of either sign.
Rational ratio(long n, long m);

struct Monomial {
  int a = 0;  // exponent of x
  int b = 0;  // exponent of y
  auto operator<=>(const Monomial&) const = default;
};

struct WeightSystem {
  int w1 = 1;
  int w2 = 1;
  bool operator==(const WeightSystem&) const = default;

  int degree(Monomial m) const { return w1 * m.a + w2 * m.b; }
};

// Sparse bivariate polynomial; never stores zero coefficients.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(int c) : Poly(Rational(c)) {}
  static Poly monomial(Monomial m, const Rational& c = 1);
  static Poly x() { return monomial({1, 0}); }
  static Poly y() { return monomial({0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(Monomial m) const;
  void add_term(Monomial m, const Rational& c);
  int total_degree() const;  // -1 for zero

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator-(Poly p) { return p *= Rational(-1); }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly pow(int n) const;

 private:
  Terms terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Poly& p, const Rational& c);
Poly partial_x(const Poly& p);
Poly partial_y(const Poly& p);

// Zero is homogeneous of every degree; Mixed has no degree.
struct Homogeneity {
  enum class Kind { Zero, Homogeneous, Mixed };
  Kind kind = Kind::Zero;
  int degree = 0;

  bool homogeneous() const { return kind != Kind::Mixed; }
  bool has_degree(int d) const {
    return kind == Kind::Zero || (kind == Kind::Homogeneous && degree == d);
  }
};

Homogeneity weighted_degree(const Poly& p, const WeightSystem& w);
std::map<int, Poly> homogeneous_components(const Poly& p, const WeightSystem& w);

struct GradedBasis {
  int degree = 0;
  std::vector<Monomial> monomials;  // (a, b)-lex ascending
};

GradedBasis monomials_of_degree(const WeightSystem& w, int D);

// Grammar: expr := term (('+'|'-') term)*, term := [coeff '*'] factor ('*' factor)*
// with factors x, y, x^n, y^n and parenthesized expressions.
Poly parse_poly(std::string_view text);
std::string render(const Poly& p);
std::string render(Monomial m);

}  // namespace pcoh
