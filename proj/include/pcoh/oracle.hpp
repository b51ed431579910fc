#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcoh/cohomology.hpp"
#include "pcoh/linalg.hpp"

namespace pcoh {

// Degree-D pieces of the Poisson complex for h = 0. d0 maps degree D
// functions to degree D + s vector fields, d1 degree D vector fields to
// degree D + s bivectors, where s = d - w1 - w2.
struct GradedComplexSlice {
  int degree = 0;
  std::size_t dim0 = 0, dim1 = 0, dim2 = 0;
  Matrix d0, d1;
};

GradedComplexSlice graded_slice(const PoissonStructure& P, int degree);

struct DegreeRow {
  int degree = 0;
  std::array<std::size_t, 3> dim{};
  std::array<std::size_t, 3> rank_out{};  // rank of delta leaving degree D
  std::array<std::size_t, 3> rank_in{};   // rank of delta arriving in degree D
  std::array<std::size_t, 3> hp{};
};

struct DimensionReport {
  enum class Mode { Graded, Jet } mode = Mode::Graded;
  std::vector<DegreeRow> rows;  // graded mode only
  std::array<std::size_t, 3> totals{};
  int order = 0;  // D_max or jet order N
  // Jet mode: the same count at the stabilization order.
  std::optional<std::array<std::size_t, 3>> totals_check;
  int check_order = 0;
  bool stabilized = true;
};

// Exact per-degree cohomology for h = 0, summed over degrees <= max_degree.
DimensionReport graded_dims(const PoissonStructure& P, int max_degree);

// Cohomology classes of the formal complex seen through the jet of order N:
// the image of H(C / C_{>N}) in H(C / C_{>N-s}).
DimensionReport jet_dims(const PoissonStructure& P, int jet_order);

// Stabilized jet dims for h != 0, graded dims up to 2d otherwise.
DimensionReport oracle_dims(const PoissonStructure& P);

struct BracketCheck {
  bool pass = false;
  std::string detail;
};

// Brackets the representatives of a and b and certifies that the result
// minus the representative of `expected` is a coboundary.
BracketCheck oracle_bracket_check(const PoissonStructure& P, const HPElement& a, const HPElement& b,
                                  const HPElement& expected, int jet_order);

}  // namespace pcoh
