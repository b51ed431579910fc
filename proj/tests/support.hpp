#pragma once

#include <random>
#include <vector>

#include "pcoh/arnold.hpp"
#include "pcoh/polyvector.hpp"

namespace testing {

using pcoh::Bivector;
using pcoh::Monomial;
using pcoh::Poly;
using pcoh::Polyvector;
using pcoh::Rational;
using pcoh::VectorField;
using pcoh::WeightSystem;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

  // numerator in -3..3, denominator in 1..4
  Rational rational(bool nonzero = false) {
    for (;;) {
      Rational q(uniform(-3, 3), uniform(1, 4));
      q.canonicalize();
      if (!nonzero || q != 0) return q;
    }
  }

  // Up to `terms` monomials of total degree <= max_deg.
  Poly poly(int max_deg = 12, int terms = 4) {
    Poly p;
    int n = uniform(0, terms);
    for (int i = 0; i < n; ++i) {
      int a = uniform(0, max_deg);
      int b = uniform(0, max_deg - a);
      p.add_term({a, b}, rational(true));
    }
    return p;
  }

  // Weight-homogeneous of degree D (zero if there are no monomials).
  Poly homogeneous(const WeightSystem& w, int D, int terms = 4) {
    Poly p;
    if (D < 0) return p;
    std::vector<Monomial> ms;
    for (int a = 0; w.w1 * a <= D; ++a)
      if ((D - w.w1 * a) % w.w2 == 0) ms.push_back({a, (D - w.w1 * a) / w.w2});
    if (ms.empty()) return p;
    for (int i = 0; i < terms; ++i) p.add_term(ms[uniform(0, int(ms.size()) - 1)], rational());
    return p;
  }

  Polyvector polyvector(int k, int max_deg = 12) {
    switch (k) {
      case 0: return poly(max_deg);
      case 1: return VectorField{poly(max_deg), poly(max_deg)};
      default: return Bivector{poly(max_deg)};
    }
  }

  // P d/dx + Q d/dy of polyvector degree D.
  VectorField homogeneous_field(const WeightSystem& w, int D) {
    return {homogeneous(w, D + w.w1), homogeneous(w, D + w.w2)};
  }
};

// Catalog entries used by sampled tests.
inline std::vector<pcoh::SingularityType> sample_types(int p_max) { return pcoh::catalog(p_max); }

}  // namespace testing
