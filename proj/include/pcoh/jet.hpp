#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "pcoh/cohomology.hpp"
#include "pcoh/linalg.hpp"

namespace pcoh {

// Monomial basis of k-cochains whose polyvector degree lies in [lo, hi].
// Entries are sorted by (degree, component, monomial).
class CochainSpace {
 public:
  struct Entry {
    int degree;
    int component;  // 0: d/dx, 1: d/dy (vector fields only)
    Monomial m;
  };

  CochainSpace(int k, const WeightSystem& w, int lo, int hi);

  int k() const { return k_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::optional<std::size_t> index(int component, Monomial m) const;
  // Indices of entries with degree in [lo, hi].
  std::vector<std::size_t> degree_range(int lo, int hi) const;

  // Terms outside the space are dropped when `truncate`, otherwise rejected.
  Vector coordinates(const Polyvector& a, bool truncate) const;
  Polyvector element(const Vector& x) const;
  Polyvector basis_element(std::size_t i) const;

 private:
  int k_;
  WeightSystem w_;
  std::vector<Entry> entries_;
  std::map<std::pair<int, Monomial>, std::size_t> index_;
};

// Matrix of delta = [-, pi] between two cochain spaces; targets outside `to`
// are dropped when `truncate`, otherwise rejected.
Matrix differential_matrix(const CochainSpace& from, const CochainSpace& to, const Bivector& pi,
                          bool truncate);

// The Poisson complex modulo cochains of polyvector degree > N. This is a
// quotient complex as long as delta does not lower degrees (d >= w1 + w2).
class JetComplex {
 public:
  JetComplex(const PoissonStructure& P, int order);

  int order() const { return order_; }
  const PoissonStructure& structure() const { return P_; }
  const CochainSpace& space(int k) const { return spaces_.at(k); }
  // delta^k : C^k -> C^{k+1}, k = 0, 1.
  const Matrix& differential(int k) const { return diff_.at(k); }

  // Y with delta(Y) = B modulo degree > N.
  std::optional<VectorField> solve_hp2_coboundary(const Bivector& b) const;
  std::optional<Poly> solve_hp1_coboundary(const VectorField& x) const;
  // X = alpha u + sum beta_j v_j + delta(G) modulo degree > N.
  std::optional<HP1Class> decompose_hp1(const VectorField& x) const;

 private:
  PoissonStructure P_;
  int order_;
  std::vector<CochainSpace> spaces_;
  std::vector<Matrix> diff_;
  mutable std::mutex mu_;
  mutable std::unique_ptr<RowReduction> d0_, d1_, hp1_;
};

// Process-wide cache of recently used jet complexes.
std::shared_ptr<const JetComplex> shared_jet_complex(const PoissonStructure& P, int order);

}  // namespace pcoh
