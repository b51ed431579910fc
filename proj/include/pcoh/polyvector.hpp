#pragma once

#include <optional>
#include <variant>

#include "pcoh/poly.hpp"

namespace pcoh {

// P d/dx + Q d/dy
struct VectorField {
  Poly p, q;

  bool is_zero() const { return p.is_zero() && q.is_zero(); }
  bool operator==(const VectorField&) const = default;
  VectorField& operator+=(const VectorField& o) {
    p += o.p;
    q += o.q;
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    p -= o.p;
    q -= o.q;
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Poly& g, const VectorField& v) { return {g * v.p, g * v.q}; }
  friend VectorField operator*(const Rational& c, const VectorField& v) { return {v.p * c, v.q * c}; }
};

// b d/dx ^ d/dy
struct Bivector {
  Poly coef;

  bool is_zero() const { return coef.is_zero(); }
  bool operator==(const Bivector&) const = default;
  friend Bivector operator+(const Bivector& a, const Bivector& b) { return {a.coef + b.coef}; }
  friend Bivector operator-(const Bivector& a, const Bivector& b) { return {a.coef - b.coef}; }
  friend Bivector operator*(const Rational& c, const Bivector& b) { return {b.coef * c}; }
};

class Polyvector {
 public:
  Polyvector(Poly g) : v_(std::move(g)) {}               // NOLINT
  Polyvector(VectorField x) : v_(std::move(x)) {}        // NOLINT
  Polyvector(Bivector b) : v_(std::move(b)) {}           // NOLINT

  int degree() const { return static_cast<int>(v_.index()); }
  bool is_zero() const;
  const Poly& function() const { return std::get<Poly>(v_); }
  const VectorField& vector() const { return std::get<VectorField>(v_); }
  const Bivector& bivector() const { return std::get<Bivector>(v_); }

  bool operator==(const Polyvector&) const = default;
  Polyvector& operator+=(const Polyvector& o);
  friend Polyvector operator+(Polyvector a, const Polyvector& b) { return a += b; }
  friend Polyvector operator-(const Polyvector& a, const Polyvector& b);
  friend Polyvector operator*(const Rational& c, const Polyvector& a);

 private:
  std::variant<Poly, VectorField, Bivector> v_;
};

Polyvector zero_polyvector(int degree);

Poly divergence(const VectorField& x);
VectorField hamiltonian(const Poly& g);  // (g_y, -g_x)
VectorField euler(const WeightSystem& w);
Poly apply(const VectorField& x, const Poly& g);
VectorField lie_bracket(const VectorField& x, const VectorField& y);

// Schouten-Nijenhuis bracket. Degree-3 results do not exist in two variables;
// they are reported as nullopt (the identically zero trivector).
std::optional<Polyvector> sn_bracket(const Polyvector& a, const Polyvector& b);
// Throws DomainError when the total degree exceeds 2.
Polyvector wedge(const Polyvector& a, const Polyvector& b);
// delta = [-, pi]; zero on bivectors.
Polyvector poisson_differential(const Bivector& pi, const Polyvector& a);

// Degree of a weight-homogeneous polyvector under [W, X] = r X.
Homogeneity polyvector_degree(const Polyvector& a, const WeightSystem& w);

}  // namespace pcoh
