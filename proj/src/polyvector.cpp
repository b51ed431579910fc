#include "pcoh/polyvector.hpp"

#include "pcoh/errors.hpp"

namespace pcoh {

bool Polyvector::is_zero() const {
  switch (degree()) {
    case 0: return function().is_zero();
    case 1: return vector().is_zero();
    default: return bivector().is_zero();
  }
}

Polyvector& Polyvector::operator+=(const Polyvector& o) {
  if (degree() != o.degree()) throw DomainError("adding polyvectors of different degree");
  switch (degree()) {
    case 0: std::get<Poly>(v_) += o.function(); break;
    case 1: std::get<VectorField>(v_) += o.vector(); break;
    default: std::get<Bivector>(v_).coef += o.bivector().coef; break;
  }
  return *this;
}

Polyvector operator*(const Rational& c, const Polyvector& a) {
  switch (a.degree()) {
    case 0: return Polyvector(a.function() * c);
    case 1: return Polyvector(c * a.vector());
    default: return Polyvector(c * a.bivector());
  }
}

Polyvector operator-(const Polyvector& a, const Polyvector& b) { return a + Rational(-1) * b; }

Polyvector zero_polyvector(int degree) {
  switch (degree) {
    case 0: return Polyvector(Poly());
    case 1: return Polyvector(VectorField{});
    case 2: return Polyvector(Bivector{});
    default: throw DomainError("no polyvectors of degree " + std::to_string(degree));
  }
}

Poly divergence(const VectorField& x) { return partial_x(x.p) + partial_y(x.q); }

VectorField hamiltonian(const Poly& g) { return {partial_y(g), -partial_x(g)}; }

VectorField euler(const WeightSystem& w) {
  return {Poly::monomial({1, 0}, w.w1), Poly::monomial({0, 1}, w.w2)};
}

Poly apply(const VectorField& x, const Poly& g) { return x.p * partial_x(g) + x.q * partial_y(g); }

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  return {apply(x, y.p) - apply(y, x.p), apply(x, y.q) - apply(y, x.q)};
}

namespace {

// Brackets with a.degree() <= b.degree().
Polyvector ordered_bracket(const Polyvector& a, const Polyvector& b) {
  int p = a.degree(), q = b.degree();
  if (p == 0 && q == 0) return Polyvector(Poly());
  if (p == 0 && q == 1) return Polyvector(-apply(b.vector(), a.function()));
  if (p == 0 && q == 2) return Polyvector(-b.bivector().coef * hamiltonian(a.function()));
  if (p == 1 && q == 1) return Polyvector(lie_bracket(a.vector(), b.vector()));
  // p == 1, q == 2
  const VectorField& x = a.vector();
  const Poly& c = b.bivector().coef;
  return Polyvector(Bivector{apply(x, c) - c * divergence(x)});
}

}  // namespace

std::optional<Polyvector> sn_bracket(const Polyvector& a, const Polyvector& b) {
  int p = a.degree(), q = b.degree();
  if (p + q - 1 > 2) return std::nullopt;
  if (p <= q) return ordered_bracket(a, b);
  // [P, Q] = -(-1)^{(p-1)(q-1)} [Q, P]
  int sign = ((p - 1) * (q - 1)) % 2 == 0 ? -1 : 1;
  return Rational(sign) * ordered_bracket(b, a);
}

Polyvector wedge(const Polyvector& a, const Polyvector& b) {
  int p = a.degree(), q = b.degree();
  if (p + q > 2) throw DomainError("wedge product of degree " + std::to_string(p + q));
  if (p == 0) {
    const Poly& g = a.function();
    switch (q) {
      case 0: return Polyvector(g * b.function());
      case 1: return Polyvector(g * b.vector());
      default: return Polyvector(Bivector{g * b.bivector().coef});
    }
  }
  if (q == 0) return wedge(b, a);
  const VectorField &x = a.vector(), &y = b.vector();
  return Polyvector(Bivector{x.p * y.q - x.q * y.p});
}

Polyvector poisson_differential(const Bivector& pi, const Polyvector& a) {
  if (a.degree() == 2) return Polyvector(Bivector{});
  return *sn_bracket(a, Polyvector(pi));
}

Homogeneity polyvector_degree(const Polyvector& a, const WeightSystem& w) {
  auto shift = [](Homogeneity h, int by) {
    if (h.kind == Homogeneity::Kind::Homogeneous) h.degree -= by;
    return h;
  };
  switch (a.degree()) {
    case 0: return weighted_degree(a.function(), w);
    case 1: {
      Homogeneity hp = shift(weighted_degree(a.vector().p, w), w.w1);
      Homogeneity hq = shift(weighted_degree(a.vector().q, w), w.w2);
      if (!hp.homogeneous() || !hq.homogeneous()) return {Homogeneity::Kind::Mixed, 0};
      if (hp.kind == Homogeneity::Kind::Zero) return hq;
      if (hq.kind == Homogeneity::Kind::Zero) return hp;
      if (hp.degree != hq.degree) return {Homogeneity::Kind::Mixed, 0};
      return hp;
    }
    default: return shift(weighted_degree(a.bivector().coef, w), w.w1 + w.w2);
  }
}

}  // namespace pcoh
