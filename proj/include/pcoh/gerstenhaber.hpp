#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcoh/cohomology.hpp"

namespace pcoh {

struct BasisElement {
  std::string name;  // "1", "u", "v1", "w3", "t2"
  int degree = 0;
  std::size_t slot = 0;  // coordinate index within its degree
  Polyvector rep = Polyvector(Poly());
};

// Ordered 1, u, v_1..v_r, w_1..w_c, t_1..t_r.
struct CanonicalBasis {
  std::vector<BasisElement> elements;

  std::size_t index(const std::string& name) const;
  HPElement element(const PoissonStructure& P, std::size_t i) const;
};

CanonicalBasis canonical_basis(const PoissonStructure& P);

struct TableEntry {
  std::size_t left = 0, right = 0;
  HPElement result;
};

struct GerstenhaberTable {
  CanonicalBasis basis;
  std::vector<TableEntry> wedge;    // pairs with total degree <= 2
  std::vector<TableEntry> bracket;  // pairs with bracket degree 0..2
  int jet_order = 0;

  // Bilinear extensions; results of degree outside 0..2 are zero.
  HPElement wedge_of(const PoissonStructure& P, const HPElement& a, const HPElement& b) const;
  HPElement bracket_of(const PoissonStructure& P, const HPElement& a, const HPElement& b) const;
  const HPElement* wedge_entry(std::size_t i, std::size_t j) const;
  const HPElement* bracket_entry(std::size_t i, std::size_t j) const;
};

GerstenhaberTable wedge_table(const PoissonStructure& P, int jet_order);
GerstenhaberTable bracket_table(const PoissonStructure& P, int jet_order);
GerstenhaberTable gerstenhaber_table(const PoissonStructure& P, int jet_order);

struct Presentation {
  std::vector<std::pair<std::string, int>> generators;
  std::vector<std::string> factors;  // one per fiber-product factor
  std::vector<std::string> relations;
  std::vector<std::string> identifications;  // t_j in terms of u v_j
  std::string text;
};

Presentation presentation(const PoissonStructure& P);
// The same form for r odd generators v_j, c even generators and degree d.
Presentation presentation(std::size_t r, std::size_t c, int d);

struct CheckReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// The product relations of the presentation against the wedge table.
CheckReport presentation_check(const PoissonStructure& P, const GerstenhaberTable& table);

// [F ^ G, H] = [F, H] ^ G + (-1)^{(|H|-1)|F|} F ^ [G, H] on basis triples,
// using table lookups only.
CheckReport leibniz_check(const PoissonStructure& P, const GerstenhaberTable& table);

}  // namespace pcoh
