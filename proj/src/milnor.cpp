#include "pcoh/milnor.hpp"

#include <algorithm>
#include <set>

#include "pcoh/errors.hpp"
#include "pcoh/linalg.hpp"

namespace pcoh {

namespace {

struct FData {
  Poly fx, fy;
  int d;
  int s;  // d - w1 - w2
};

FData analyse(const Poly& f, const WeightSystem& w) {
  Homogeneity h = weighted_degree(f, w);
  if (h.kind != Homogeneity::Kind::Homogeneous)
    throw InputError("f = " + render(f) + " is not weight-homogeneous for weights (" +
                     std::to_string(w.w1) + "," + std::to_string(w.w2) + ")");
  if (h.degree <= 0) throw InputError("f must have positive weighted degree");
  return {partial_x(f), partial_y(f), h.degree, h.degree - w.w1 - w.w2};
}

std::size_t index_of(const std::vector<Monomial>& v, Monomial m) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), m) - v.begin());
}

void fill_column(Matrix& m, std::size_t col, const Poly& p, const std::vector<Monomial>& rows) {
  for (const auto& [mono, c] : p.terms()) {
    std::size_t r = index_of(rows, mono);
    if (r == rows.size()) throw InternalError("term outside the graded piece");
    m(r, col) = c;
  }
}

// Columns: x^a y^b f_x for monomials of degree D - (d - w1), then the same for f_y.
struct IdealSlice {
  std::vector<Monomial> rows;
  std::vector<Monomial> a_monos, b_monos;
  Matrix matrix;
};

IdealSlice ideal_slice(const FData& fd, const WeightSystem& w, int D) {
  IdealSlice s;
  s.rows = monomials_of_degree(w, D).monomials;
  if (!fd.fx.is_zero()) s.a_monos = monomials_of_degree(w, D - (fd.d - w.w1)).monomials;
  if (!fd.fy.is_zero()) s.b_monos = monomials_of_degree(w, D - (fd.d - w.w2)).monomials;
  s.matrix = Matrix(s.rows.size(), s.a_monos.size() + s.b_monos.size());
  std::size_t col = 0;
  for (Monomial m : s.a_monos) fill_column(s.matrix, col++, Poly::monomial(m) * fd.fx, s.rows);
  for (Monomial m : s.b_monos) fill_column(s.matrix, col++, Poly::monomial(m) * fd.fy, s.rows);
  return s;
}

Matrix with_unit_columns(const Matrix& base, const std::vector<std::size_t>& units) {
  Matrix extra(base.rows(), units.size());
  for (std::size_t j = 0; j < units.size(); ++j) extra(units[j], j) = 1;
  return Matrix::hconcat(base, extra);
}

void check_finite_codimension(const FData& fd, const WeightSystem& w, const Poly& f) {
  int lo = std::max(0, 2 * fd.s + 1);
  for (int D = lo; D < lo + std::max(w.w1, w.w2); ++D) {
    IdealSlice s = ideal_slice(fd, w, D);
    if (rank(s.matrix) != s.rows.size())
      throw InputError("f = " + render(f) +
                       " does not have finite codimension (Jacobian ideal misses degree " +
                       std::to_string(D) + ")");
  }
}

}  // namespace

MilnorBasis milnor_basis(const Poly& f, const WeightSystem& w) {
  FData fd = analyse(f, w);
  check_finite_codimension(fd, w, f);
  MilnorBasis basis;
  for (int D = 0; D <= 2 * fd.s; ++D) {
    IdealSlice s = ideal_slice(fd, w, D);
    std::vector<std::size_t> kept;
    std::size_t current = rank(s.matrix);
    for (std::size_t i = 0; i < s.rows.size() && current < s.rows.size(); ++i) {
      kept.push_back(i);
      std::size_t next = rank(with_unit_columns(s.matrix, kept));
      if (next > current) {
        current = next;
        basis.monomials.push_back(s.rows[i]);
        basis.degrees.push_back(D);
      } else {
        kept.pop_back();
      }
    }
  }
  return basis;
}

MilnorBasis milnor_basis_override(const Poly& f, const WeightSystem& w,
                                  const std::vector<Monomial>& monomials) {
  FData fd = analyse(f, w);
  check_finite_codimension(fd, w, f);
  std::set<Monomial> seen(monomials.begin(), monomials.end());
  if (seen.size() != monomials.size()) throw InputError("basis override repeats a monomial");
  for (Monomial m : monomials)
    if (w.degree(m) > 2 * fd.s)
      throw InputError("basis override monomial " + render(m) + " lies in the Jacobian ideal");
  for (int D = 0; D <= 2 * fd.s; ++D) {
    IdealSlice s = ideal_slice(fd, w, D);
    std::vector<std::size_t> units;
    for (Monomial m : monomials)
      if (w.degree(m) == D) units.push_back(index_of(s.rows, m));
    std::size_t ideal_rank = rank(s.matrix);
    if (ideal_rank + units.size() != s.rows.size() ||
        rank(with_unit_columns(s.matrix, units)) != s.rows.size())
      throw InputError("basis override does not complement the Jacobian ideal in degree " +
                       std::to_string(D));
  }
  MilnorBasis basis;
  basis.monomials = monomials;
  for (Monomial m : monomials) basis.degrees.push_back(w.degree(m));
  return basis;
}

JacobianDecomposition jacobian_decompose(const Poly& g, const Poly& f, const WeightSystem& w,
                                         const MilnorBasis& basis) {
  FData fd = analyse(f, w);
  JacobianDecomposition out;
  out.lambda.assign(basis.c(), 0);
  Homogeneity h = weighted_degree(g, w);
  if (h.kind == Homogeneity::Kind::Zero) return out;
  if (h.kind == Homogeneity::Kind::Mixed)
    throw InputError("jacobian_decompose needs a weight-homogeneous polynomial, got " + render(g));
  int D = h.degree;
  IdealSlice s = ideal_slice(fd, w, D);
  std::vector<std::size_t> basis_idx, units;
  for (std::size_t i = 0; i < basis.c(); ++i)
    if (basis.degrees[i] == D) {
      basis_idx.push_back(i);
      units.push_back(index_of(s.rows, basis.monomials[i]));
    }
  Matrix units_m(s.rows.size(), units.size());
  for (std::size_t j = 0; j < units.size(); ++j) units_m(units[j], j) = 1;
  Matrix a = Matrix::hconcat(units_m, s.matrix);
  Vector rhs(s.rows.size());
  for (const auto& [m, c] : g.terms()) rhs[index_of(s.rows, m)] = c;
  auto x = RowReduction(a).solve(rhs);
  if (!x) throw InternalError("Milnor basis does not span degree " + std::to_string(D));
  std::size_t col = 0;
  for (std::size_t i : basis_idx) out.lambda[i] = (*x)[col++];
  for (Monomial m : s.a_monos) out.cofactor.p.add_term(m, (*x)[col++]);
  for (Monomial m : s.b_monos) out.cofactor.q.add_term(m, (*x)[col++]);
  return out;
}

PSpaceBasis p_space(int f_degree, const WeightSystem& w) {
  PSpaceBasis p;
  p.degree = f_degree - w.w1 - w.w2;
  p.monomials = monomials_of_degree(w, p.degree).monomials;
  return p;
}

}  // namespace pcoh
