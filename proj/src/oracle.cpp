#include "pcoh/oracle.hpp"

#include <map>

#include "pcoh/errors.hpp"
#include "pcoh/jet.hpp"

namespace pcoh {

GradedComplexSlice graded_slice(const PoissonStructure& P, int degree) {
  if (!P.h.is_zero()) throw InputError("graded slices need h = 0");
  int s = P.s();
  CochainSpace c0(0, P.w, degree, degree), c1(1, P.w, degree, degree), c2(2, P.w, degree, degree);
  CochainSpace t1(1, P.w, degree + s, degree + s), t2(2, P.w, degree + s, degree + s);
  Bivector pi = P.pi();
  GradedComplexSlice slice;
  slice.degree = degree;
  slice.dim0 = c0.size();
  slice.dim1 = c1.size();
  slice.dim2 = c2.size();
  slice.d0 = differential_matrix(c0, t1, pi, false);
  slice.d1 = differential_matrix(c1, t2, pi, false);
  return slice;
}

DimensionReport graded_dims(const PoissonStructure& P, int max_degree) {
  if (!P.h.is_zero()) throw InputError("graded_dims needs h = 0");
  int s = P.s();
  int lo = -(P.w.w1 + P.w.w2);
  std::map<int, std::array<std::size_t, 2>> ranks;  // degree -> (rank d0, rank d1)
  auto ranks_at = [&](int D) -> const std::array<std::size_t, 2>& {
    auto it = ranks.find(D);
    if (it != ranks.end()) return it->second;
    std::array<std::size_t, 2> r{0, 0};
    if (D >= lo) {
      GradedComplexSlice sl = graded_slice(P, D);
      r = {rank(sl.d0), rank(sl.d1)};
    }
    return ranks.emplace(D, r).first->second;
  };
  DimensionReport rep;
  rep.mode = DimensionReport::Mode::Graded;
  rep.order = max_degree;
  for (int D = lo; D <= max_degree; ++D) {
    DegreeRow row;
    row.degree = D;
    row.dim = {CochainSpace(0, P.w, D, D).size(), CochainSpace(1, P.w, D, D).size(),
               CochainSpace(2, P.w, D, D).size()};
    const auto here = ranks_at(D);
    const auto before = ranks_at(D - s);
    row.rank_out = {here[0], here[1], 0};
    row.rank_in = {0, before[0], before[1]};
    for (int k = 0; k < 3; ++k) {
      row.hp[k] = row.dim[k] - row.rank_out[k] - row.rank_in[k];
      rep.totals[k] += row.hp[k];
    }
    rep.rows.push_back(row);
  }
  return rep;
}

namespace {

std::array<std::size_t, 3> jet_totals(const PoissonStructure& P, int N) {
  auto jc = shared_jet_complex(P, N);
  int M = N - P.s();
  const CochainSpace &c0 = jc->space(0), &c1 = jc->space(1), &c2 = jc->space(2);
  const Matrix &d0 = jc->differential(0), &d1 = jc->differential(1);
  auto low0 = c0.degree_range(0, M), low1 = c1.degree_range(-1000000, M),
       low2 = c2.degree_range(-1000000, M);
  // Cochains of degree in (M, N] are cocycles modulo degree > N and project to zero.
  std::size_t high0 = c0.size() - low0.size(), high1 = c1.size() - low1.size();
  std::size_t rank_d0 = rank(d0), rank_d1 = rank(d1);
  std::size_t rank_d0_low = rank(d0.select_cols(low0).select_rows(low1));
  std::size_t rank_d1_low = rank(d1.select_cols(low1).select_rows(low2));
  return {c0.size() - rank_d0 - high0, c1.size() - rank_d1 - high1 - rank_d0_low,
          low2.size() - rank_d1_low};
}

}  // namespace

DimensionReport jet_dims(const PoissonStructure& P, int jet_order) {
  if (P.s() < 0) throw InputError("jet_dims needs d >= w1 + w2");
  if (jet_order < 3 * P.s())
    throw InputError("jet order must be at least 3(d - w1 - w2) = " + std::to_string(3 * P.s()));
  DimensionReport rep;
  rep.mode = DimensionReport::Mode::Jet;
  rep.order = jet_order;
  rep.check_order = stabilization_order(P, jet_order);
  rep.totals = jet_totals(P, jet_order);
  rep.totals_check = jet_totals(P, rep.check_order);
  rep.stabilized = rep.totals == *rep.totals_check;
  return rep;
}

DimensionReport oracle_dims(const PoissonStructure& P) {
  if (P.h.is_zero()) return graded_dims(P, 2 * P.d);
  return jet_dims(P, P.default_jet_order());
}

BracketCheck oracle_bracket_check(const PoissonStructure& P, const HPElement& a, const HPElement& b,
                                  const HPElement& expected, int jet_order) {
  auto br = sn_bracket(representative(a, P), representative(b, P));
  if (!br) return {expected.degree > 2 || expected.is_zero(), "bracket lands in degree 3"};
  if (br->degree() != expected.degree) return {false, "degree mismatch"};
  Polyvector diff = *br - representative(expected, P);
  switch (diff.degree()) {
    case 0:
      return {diff.is_zero(), diff.is_zero() ? "difference vanishes" : "nonzero Casimir difference"};
    case 1: {
      auto cert = is_coboundary_hp1(diff.vector(), P, jet_order);
      return {cert.coboundary, cert.coboundary ? "difference is delta(G) to order " +
                                                     std::to_string(jet_order)
                                               : "difference is not a coboundary"};
    }
    default: {
      auto cert = is_coboundary_hp2(diff.bivector(), P, jet_order);
      return {cert.coboundary, cert.coboundary ? "difference is delta(Y) to order " +
                                                     std::to_string(jet_order)
                                               : "difference is not a coboundary"};
    }
  }
}

}  // namespace pcoh
