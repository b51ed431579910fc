#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcoh/milnor.hpp"

namespace pcoh {

// Pi = f (1 + h) d/dx ^ d/dy.
struct PoissonStructure {
  Poly f, h;
  WeightSystem w;
  int d = 0;
  MilnorBasis milnor;
  PSpaceBasis pspace;

  int s() const { return d - w.w1 - w.w2; }  // degree of f d/dx^d/dy; also deg e_j
  std::size_t c() const { return milnor.c(); }
  std::size_t r() const { return pspace.r(); }
  Poly one_plus_h() const { return Poly(1) + h; }
  Bivector pi() const { return {f * one_plus_h()}; }
  int default_jet_order() const { return 4 * d; }

  // Canonical cocycle representatives.
  VectorField u() const;                  // (1+h) H_f
  VectorField v(std::size_t j) const;     // e_j (1+h) W
  Bivector w_rep(std::size_t i) const;    // u_i d/dx^d/dy
  Bivector t(std::size_t j) const;        // e_j f d/dx^d/dy
};

// Validates f (homogeneous, d > 0, finite codimension) and h (zero, or
// homogeneous of degree d - w1 - w2 > 0). Throws InputError.
PoissonStructure make_structure(const Poly& f, const Poly& h, const WeightSystem& w);
PoissonStructure make_structure(const Poly& f, const Poly& h, const WeightSystem& w,
                                const std::vector<Monomial>& basis_override);

std::array<std::size_t, 4> hp_dimensions(const PoissonStructure& P);

struct HP1Class {
  Rational alpha;
  std::vector<Rational> beta;
  bool operator==(const HP1Class&) const = default;
};

struct HP2Class {
  std::vector<Rational> lambda;
  std::vector<Rational> q;
  bool operator==(const HP2Class&) const = default;
  bool is_zero() const;
  HP2Class& operator+=(const HP2Class& o);
};

HP2Class zero_hp2(const PoissonStructure& P);
HP1Class zero_hp1(const PoissonStructure& P);
VectorField representative(const HP1Class& c, const PoissonStructure& P);
Bivector representative(const HP2Class& c, const PoissonStructure& P);

enum class Lemma31 { A, B, C };

// X must be weight-homogeneous. (b) needs deg X != d - w1 - w2, (c) needs
// deg X != 0. The defining identity is checked before returning.
VectorField lemma31(const VectorField& x, const PoissonStructure& P, Lemma31 variant);

// One homogeneous component g = sum lambda_i u_i + X(f) of the input and the
// vector fields produced while reducing X(f).
struct ComponentTrace {
  int degree = 0;                  // weighted degree of g
  std::optional<int> k;            // deg g = d - k (d - w1 - w2), k >= -1
  VectorField cofactor;            // X
  std::vector<VectorField> chain;  // X_0 .. X_k
  HP2Class contribution;
};

struct HP2Normalization {
  HP2Class cls;
  std::vector<ComponentTrace> trace;
};

HP2Class normalize_hp2_pi0(const Bivector& b, const PoissonStructure& P);
HP2Class normalize_hp2_pi(const Bivector& b, const PoissonStructure& P);
HP2Normalization normalize_hp2_traced(const Bivector& b, const PoissonStructure& P);

// Classifies a single homogeneous component from a given decomposition; any
// cofactor X with g - sum lambda_i u_i = X(f) gives the same class.
ComponentTrace classify_component(int degree, const std::vector<Rational>& lambda,
                                  const VectorField& cofactor, const PoissonStructure& P);

// Jet-space solves; both repeat at the stabilization order
// N + max(d - w1 - w2, 1) and throw JetInstabilityError on disagreement.
HP1Class normalize_hp1(const VectorField& x, const PoissonStructure& P, int jet_order);

struct CoboundaryCertificate {
  bool coboundary = false;
  std::optional<VectorField> witness;  // Y with delta(Y) = B modulo degree > N
  int jet_order = 0;
};

CoboundaryCertificate is_coboundary_hp2(const Bivector& b, const PoissonStructure& P,
                                        int jet_order);

struct Hp1CoboundaryCertificate {
  bool coboundary = false;
  std::optional<Poly> witness;
  int jet_order = 0;
};

Hp1CoboundaryCertificate is_coboundary_hp1(const VectorField& x, const PoissonStructure& P,
                                           int jet_order);

int stabilization_order(const PoissonStructure& P, int jet_order);

// A cohomology class in canonical coordinates. Degree 0: [1]; degree 1:
// [u, v_1..v_r]; degree 2: [w_1..w_c, t_1..t_r].
struct HPElement {
  int degree = 0;
  std::vector<Rational> coords;
  bool operator==(const HPElement&) const = default;
  bool is_zero() const;
};

std::size_t hp_basis_size(const PoissonStructure& P, int degree);
std::vector<std::string> hp_basis_names(const PoissonStructure& P, int degree);
HPElement zero_element(const PoissonStructure& P, int degree);
HPElement operator+(HPElement a, const HPElement& b);
HPElement operator-(HPElement a, const HPElement& b);
HPElement operator*(const Rational& c, HPElement a);
// "-9*w4 - 13*w7"; "0" for zero.
std::string render(const HPElement& e, const PoissonStructure& P);
HPElement to_element(const HP1Class& c);
HPElement to_element(const HP2Class& c);
HP1Class to_hp1(const HPElement& e, const PoissonStructure& P);
HP2Class to_hp2(const HPElement& e, const PoissonStructure& P);
Polyvector representative(const HPElement& e, const PoissonStructure& P);
// Normalizes a cocycle of any degree; jet_order is used for degree 1.
HPElement normalize(const Polyvector& a, const PoissonStructure& P, int jet_order);

}  // namespace pcoh
