#pragma once

#include <vector>

#include "pcoh/polyvector.hpp"

namespace pcoh {

struct MilnorBasis {
  std::vector<Monomial> monomials;  // u_1 .. u_c
  std::vector<int> degrees;
  std::size_t c() const { return monomials.size(); }
};

struct JacobianDecomposition {
  std::vector<Rational> lambda;  // one per basis monomial
  VectorField cofactor;          // g = sum lambda_i u_i + cofactor(f)
};

struct PSpaceBasis {
  std::vector<Monomial> monomials;  // e_1 .. e_r
  int degree = 0;
  std::size_t r() const { return monomials.size(); }
};

// Throws InputError if f does not have finite codimension. Basis monomials are
// ordered by weighted degree, then (a, b)-lex, greedily complementing the
// Jacobian ideal degree by degree.
MilnorBasis milnor_basis(const Poly& f, const WeightSystem& w);

// Replaces the automatic basis after checking that `monomials` complement the
// Jacobian ideal in every degree. The given order is kept.
MilnorBasis milnor_basis_override(const Poly& f, const WeightSystem& w,
                                  const std::vector<Monomial>& monomials);

// g must be weight-homogeneous; the cofactor is the particular solution with
// free variables set to zero.
JacobianDecomposition jacobian_decompose(const Poly& g, const Poly& f, const WeightSystem& w,
                                         const MilnorBasis& basis);

PSpaceBasis p_space(int f_degree, const WeightSystem& w);

}  // namespace pcoh
