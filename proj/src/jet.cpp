#include "pcoh/jet.hpp"

#include <algorithm>
#include <tuple>

#include "pcoh/errors.hpp"

namespace pcoh {

namespace {

int shift_of(int k, int component, const WeightSystem& w) {
  if (k == 0) return 0;
  if (k == 2) return w.w1 + w.w2;
  return component == 0 ? w.w1 : w.w2;
}

}  // namespace

CochainSpace::CochainSpace(int k, const WeightSystem& w, int lo, int hi) : k_(k), w_(w) {
  int components = k == 1 ? 2 : 1;
  for (int comp = 0; comp < components; ++comp) {
    int sh = shift_of(k, comp, w);
    int top = hi + sh;
    for (int a = 0; a * w.w1 <= top; ++a)
      for (int b = 0; a * w.w1 + b * w.w2 <= top; ++b) {
        int deg = a * w.w1 + b * w.w2 - sh;
        if (deg >= lo) entries_.push_back({deg, comp, {a, b}});
      }
  }
  std::sort(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.degree, x.component, x.m) < std::tie(y.degree, y.component, y.m);
  });
  for (std::size_t i = 0; i < entries_.size(); ++i)
    index_[{entries_[i].component, entries_[i].m}] = i;
}

std::optional<std::size_t> CochainSpace::index(int component, Monomial m) const {
  auto it = index_.find({component, m});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> CochainSpace::degree_range(int lo, int hi) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].degree >= lo && entries_[i].degree <= hi) out.push_back(i);
  return out;
}

Vector CochainSpace::coordinates(const Polyvector& a, bool truncate) const {
  if (a.degree() != k_) throw InternalError("cochain degree mismatch");
  Vector x(entries_.size());
  auto put = [&](int comp, const Poly& p) {
    for (const auto& [m, c] : p.terms()) {
      auto i = index(comp, m);
      if (i) {
        x[*i] = c;
      } else if (!truncate) {
        throw InternalError("cochain term outside the jet space");
      }
    }
  };
  switch (k_) {
    case 0: put(0, a.function()); break;
    case 1:
      put(0, a.vector().p);
      put(1, a.vector().q);
      break;
    default: put(0, a.bivector().coef); break;
  }
  return x;
}

Polyvector CochainSpace::element(const Vector& x) const {
  Poly p, q;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (sgn(x[i]) != 0) (entries_[i].component == 0 ? p : q).add_term(entries_[i].m, x[i]);
  switch (k_) {
    case 0: return Polyvector(p);
    case 1: return Polyvector(VectorField{p, q});
    default: return Polyvector(Bivector{p});
  }
}

Polyvector CochainSpace::basis_element(std::size_t i) const {
  Vector x(entries_.size());
  x[i] = 1;
  return element(x);
}

Matrix differential_matrix(const CochainSpace& from, const CochainSpace& to, const Bivector& pi,
                          bool truncate) {
  Matrix m(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    Vector col = to.coordinates(poisson_differential(pi, from.basis_element(j)), truncate);
    for (std::size_t i = 0; i < col.size(); ++i)
      if (sgn(col[i]) != 0) m(i, j) = col[i];
  }
  return m;
}

JetComplex::JetComplex(const PoissonStructure& P, int order) : P_(P), order_(order) {
  if (P.s() < 0) throw InputError("jet truncation needs d >= w1 + w2");
  const WeightSystem& w = P.w;
  spaces_.emplace_back(0, w, 0, order);
  spaces_.emplace_back(1, w, -std::max(w.w1, w.w2), order);
  spaces_.emplace_back(2, w, -(w.w1 + w.w2), order);
  Bivector pi = P.pi();
  diff_.push_back(differential_matrix(spaces_[0], spaces_[1], pi, true));
  diff_.push_back(differential_matrix(spaces_[1], spaces_[2], pi, true));
}

std::optional<VectorField> JetComplex::solve_hp2_coboundary(const Bivector& b) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!d1_) d1_ = std::make_unique<RowReduction>(diff_[1]);
  auto y = d1_->solve(spaces_[2].coordinates(Polyvector(b), true));
  if (!y) return std::nullopt;
  return spaces_[1].element(*y).vector();
}

std::optional<Poly> JetComplex::solve_hp1_coboundary(const VectorField& x) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!d0_) d0_ = std::make_unique<RowReduction>(diff_[0]);
  auto g = d0_->solve(spaces_[1].coordinates(Polyvector(x), true));
  if (!g) return std::nullopt;
  return spaces_[0].element(*g).function();
}

std::optional<HP1Class> JetComplex::decompose_hp1(const VectorField& x) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::size_t r = P_.r();
  if (!hp1_) {
    Matrix gens(spaces_[1].size(), r + 1);
    auto put = [&](std::size_t col, const VectorField& v) {
      Vector c = spaces_[1].coordinates(Polyvector(v), true);
      for (std::size_t i = 0; i < c.size(); ++i) gens(i, col) = c[i];
    };
    put(0, P_.u());
    for (std::size_t j = 0; j < r; ++j) put(j + 1, P_.v(j));
    auto rr = std::make_unique<RowReduction>(Matrix::hconcat(gens, diff_[0]));
    for (std::size_t j = 0; j <= r; ++j)
      if (j >= rr->rank() || rr->pivot_columns()[j] != j)
        throw JetInstabilityError("HP1 generators are dependent at jet order " +
                                  std::to_string(order_));
    hp1_ = std::move(rr);
  }
  auto sol = hp1_->solve(spaces_[1].coordinates(Polyvector(x), true));
  if (!sol) return std::nullopt;
  HP1Class cls{(*sol)[0], {}};
  for (std::size_t j = 0; j < r; ++j) cls.beta.push_back((*sol)[j + 1]);
  return cls;
}

}  // namespace pcoh
