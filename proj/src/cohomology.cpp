#include "pcoh/cohomology.hpp"

#include <list>
#include <mutex>

#include "pcoh/errors.hpp"
#include "pcoh/jet.hpp"

namespace pcoh {

VectorField PoissonStructure::u() const { return one_plus_h() * hamiltonian(f); }

VectorField PoissonStructure::v(std::size_t j) const {
  return (Poly::monomial(pspace.monomials.at(j)) * one_plus_h()) * euler(w);
}

Bivector PoissonStructure::w_rep(std::size_t i) const {
  return {Poly::monomial(milnor.monomials.at(i))};
}

Bivector PoissonStructure::t(std::size_t j) const {
  return {Poly::monomial(pspace.monomials.at(j)) * f};
}

namespace {

PoissonStructure build(const Poly& f, const Poly& h, const WeightSystem& w,
                       const std::vector<Monomial>* override_basis) {
  if (w.w1 <= 0 || w.w2 <= 0) throw InputError("weights must be positive integers");
  Homogeneity hf = weighted_degree(f, w);
  if (hf.kind != Homogeneity::Kind::Homogeneous)
    throw InputError("f = " + render(f) + " is not weight-homogeneous for weights (" +
                     std::to_string(w.w1) + "," + std::to_string(w.w2) + ")");
  if (hf.degree <= 0) throw InputError("f must have positive weighted degree");
  PoissonStructure P;
  P.f = f;
  P.h = h;
  P.w = w;
  P.d = hf.degree;
  if (!h.is_zero()) {
    if (P.s() <= 0)
      throw InputError("h must vanish when d - w1 - w2 = " + std::to_string(P.s()) + " <= 0");
    Homogeneity hh = weighted_degree(h, w);
    if (hh.kind != Homogeneity::Kind::Homogeneous || hh.degree != P.s())
      throw InputError("h = " + render(h) + " must be weight-homogeneous of degree d - w1 - w2 = " +
                       std::to_string(P.s()));
  }
  P.milnor = override_basis ? milnor_basis_override(f, w, *override_basis) : milnor_basis(f, w);
  P.pspace = p_space(P.d, w);
  return P;
}

// Coordinates of a polynomial of degree d - w1 - w2 in the basis e_j.
std::vector<Rational> e_coordinates(const Poly& p, const PoissonStructure& P) {
  std::vector<Rational> out(P.r(), 0);
  for (const auto& [m, c] : p.terms()) {
    std::size_t j = 0;
    while (j < P.r() && P.pspace.monomials[j] != m) ++j;
    if (j == P.r()) throw InternalError("term " + render(m) + " outside P_{d-w1-w2}");
    out[j] = c;
  }
  return out;
}

int field_degree(const VectorField& x, const WeightSystem& w) {
  Homogeneity h = polyvector_degree(Polyvector(x), w);
  if (h.kind != Homogeneity::Kind::Homogeneous)
    throw InputError("vector field is not weight-homogeneous");
  return h.degree;
}

}  // namespace

PoissonStructure make_structure(const Poly& f, const Poly& h, const WeightSystem& w) {
  return build(f, h, w, nullptr);
}

PoissonStructure make_structure(const Poly& f, const Poly& h, const WeightSystem& w,
                                const std::vector<Monomial>& basis_override) {
  return build(f, h, w, &basis_override);
}

std::array<std::size_t, 4> hp_dimensions(const PoissonStructure& P) {
  return {1, 1 + P.r(), P.c() + P.r(), 0};
}

bool HP2Class::is_zero() const {
  for (const auto& x : lambda)
    if (x != 0) return false;
  for (const auto& x : q)
    if (x != 0) return false;
  return true;
}

HP2Class& HP2Class::operator+=(const HP2Class& o) {
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] += o.lambda[i];
  for (std::size_t j = 0; j < q.size(); ++j) q[j] += o.q[j];
  return *this;
}

HP2Class zero_hp2(const PoissonStructure& P) {
  return {std::vector<Rational>(P.c(), 0), std::vector<Rational>(P.r(), 0)};
}

HP1Class zero_hp1(const PoissonStructure& P) { return {0, std::vector<Rational>(P.r(), 0)}; }

VectorField representative(const HP1Class& c, const PoissonStructure& P) {
  VectorField x = c.alpha * P.u();
  for (std::size_t j = 0; j < P.r(); ++j) x += c.beta[j] * P.v(j);
  return x;
}

Bivector representative(const HP2Class& c, const PoissonStructure& P) {
  Bivector b;
  for (std::size_t i = 0; i < P.c(); ++i) b = b + c.lambda[i] * P.w_rep(i);
  for (std::size_t j = 0; j < P.r(); ++j) b = b + c.q[j] * P.t(j);
  return b;
}

VectorField lemma31(const VectorField& x, const PoissonStructure& P, Lemma31 variant) {
  const Poly &f = P.f, &h = P.h;
  VectorField W = euler(P.w);
  Poly div = divergence(x);
  switch (variant) {
    case Lemma31::A: {
      Poly coef = (apply(x, h) - div * h) * ratio(1, P.d);
      VectorField z = coef * W + h * x;
      Poly fh = f * h;
      if (apply(x, fh) - div * fh != apply(z, f)) throw InternalError("lemma (a) identity failed");
      return z;
    }
    case Lemma31::B: {
      if (x.is_zero()) return x;
      int r = field_degree(x, P.w);
      if (r == P.s()) throw InputError("lemma (b) needs deg X != d - w1 - w2");
      VectorField y = x + (div * ratio(1, P.s() - r)) * W;
      if (apply(x, f) != apply(y, f) - divergence(y) * f)
        throw InternalError("lemma (b) identity failed");
      return y;
    }
    case Lemma31::C: {
      if (x.is_zero()) return x;
      int r = field_degree(x, P.w);
      if (r == 0) throw InputError("lemma (c) needs deg X != 0");
      VectorField y = h * x - (apply(x, h) * ratio(2, r)) * W;
      Poly fh = f * h;
      if (apply(x, fh) - div * fh != apply(y, f) - divergence(y) * f)
        throw InternalError("lemma (c) identity failed");
      if (!y.is_zero() && field_degree(y, P.w) != r + P.s())
        throw InternalError("lemma (c) degree check failed");
      return y;
    }
  }
  throw InternalError("unknown lemma variant");
}

ComponentTrace classify_component(int degree, const std::vector<Rational>& lambda,
                                  const VectorField& cofactor, const PoissonStructure& P) {
  ComponentTrace t;
  t.degree = degree;
  t.cofactor = cofactor;
  t.contribution = zero_hp2(P);
  t.contribution.lambda = lambda;
  int s = P.s();
  if (degree == P.d + s) {
    t.k = -1;
    t.contribution.q = e_coordinates(divergence(cofactor), P);
    return t;
  }
  if (P.h.is_zero() || s <= 0 || (P.d - degree) % s != 0 || (P.d - degree) / s < 0) return t;
  int k = (P.d - degree) / s;
  t.k = k;
  VectorField x = lemma31(cofactor, P, Lemma31::B);
  t.chain.push_back(x);
  for (int i = 1; i <= k; ++i) {
    x = lemma31(x, P, Lemma31::C);
    t.chain.push_back(x);
  }
  // Each step of the chain flips the sign: delta(X_i) = (X_i(f) - div(X_i) f) +
  // (X_{i+1}(f) - div(X_{i+1}) f).
  t.contribution.q = e_coordinates(apply(x, P.h) * Rational(k % 2 == 0 ? -2 : 2), P);
  return t;
}

HP2Normalization normalize_hp2_traced(const Bivector& b, const PoissonStructure& P) {
  HP2Normalization out{zero_hp2(P), {}};
  for (const auto& [deg, g] : homogeneous_components(b.coef, P.w)) {
    JacobianDecomposition jd = jacobian_decompose(g, P.f, P.w, P.milnor);
    ComponentTrace t = classify_component(deg, jd.lambda, jd.cofactor, P);
    out.cls += t.contribution;
    out.trace.push_back(std::move(t));
  }
  return out;
}

HP2Class normalize_hp2_pi0(const Bivector& b, const PoissonStructure& P) {
  if (!P.h.is_zero()) throw InputError("normalize_hp2_pi0 needs h = 0");
  return normalize_hp2_traced(b, P).cls;
}

HP2Class normalize_hp2_pi(const Bivector& b, const PoissonStructure& P) {
  return normalize_hp2_traced(b, P).cls;
}

// ------------------------------------------------------------- jet solves

int stabilization_order(const PoissonStructure& P, int jet_order) {
  return jet_order + std::max(P.s(), 1);
}

namespace {

std::string cache_key(const PoissonStructure& P, int order) {
  std::string key = render(P.f) + "|" + render(P.h) + "|" + std::to_string(P.w.w1) + "," +
                    std::to_string(P.w.w2) + "|" + std::to_string(order) + "|";
  for (Monomial m : P.milnor.monomials) key += render(m) + ",";
  return key;
}

void require_order(int jet_order, int minimum) {
  if (jet_order < minimum)
    throw InputError("jet order " + std::to_string(jet_order) + " is below the minimum " +
                     std::to_string(minimum));
}

}  // namespace

// Small LRU of jet complexes; bracket tables reuse the same one many times.
std::shared_ptr<const JetComplex> shared_jet_complex(const PoissonStructure& P, int order) {
  static std::mutex mu;
  static std::list<std::pair<std::string, std::shared_ptr<const JetComplex>>> cache;
  std::string key = cache_key(P, order);
  {
    std::lock_guard<std::mutex> lock(mu);
    for (auto it = cache.begin(); it != cache.end(); ++it)
      if (it->first == key) {
        cache.splice(cache.begin(), cache, it);
        return it->second;
      }
  }
  auto jc = std::make_shared<const JetComplex>(P, order);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace_front(key, jc);
  if (cache.size() > 16) cache.pop_back();
  return jc;
}

HP1Class normalize_hp1(const VectorField& x, const PoissonStructure& P, int jet_order) {
  require_order(jet_order, std::max(P.s(), 0));
  if (!poisson_differential(P.pi(), Polyvector(x)).is_zero())
    throw NotCocycleError("vector field is not a Poisson cocycle");
  auto a = shared_jet_complex(P, jet_order)->decompose_hp1(x);
  auto b = shared_jet_complex(P, stabilization_order(P, jet_order))->decompose_hp1(x);
  if (!a || !b)
    throw JetInstabilityError("HP1 decomposition has no solution at jet order " +
                              std::to_string(a ? stabilization_order(P, jet_order) : jet_order));
  if (!(*a == *b))
    throw JetInstabilityError("HP1 class changes between jet orders " + std::to_string(jet_order) +
                              " and " + std::to_string(stabilization_order(P, jet_order)));
  return *a;
}

CoboundaryCertificate is_coboundary_hp2(const Bivector& b, const PoissonStructure& P,
                                        int jet_order) {
  require_order(jet_order, std::max(2 * P.s(), 0));
  auto y = shared_jet_complex(P, jet_order)->solve_hp2_coboundary(b);
  auto y2 = shared_jet_complex(P, stabilization_order(P, jet_order))->solve_hp2_coboundary(b);
  if (y.has_value() != y2.has_value())
    throw JetInstabilityError("coboundary test changes between jet orders " +
                              std::to_string(jet_order) + " and " +
                              std::to_string(stabilization_order(P, jet_order)));
  return {y.has_value(), y, jet_order};
}

Hp1CoboundaryCertificate is_coboundary_hp1(const VectorField& x, const PoissonStructure& P,
                                           int jet_order) {
  require_order(jet_order, std::max(P.s(), 0));
  if (!poisson_differential(P.pi(), Polyvector(x)).is_zero())
    throw NotCocycleError("vector field is not a Poisson cocycle");
  auto g = shared_jet_complex(P, jet_order)->solve_hp1_coboundary(x);
  auto g2 = shared_jet_complex(P, stabilization_order(P, jet_order))->solve_hp1_coboundary(x);
  if (g.has_value() != g2.has_value())
    throw JetInstabilityError("HP1 coboundary test changes between jet orders");
  return {g.has_value(), g, jet_order};
}

}  // namespace pcoh

namespace pcoh {

bool HPElement::is_zero() const {
  for (const auto& x : coords)
    if (x != 0) return false;
  return true;
}

std::size_t hp_basis_size(const PoissonStructure& P, int degree) {
  switch (degree) {
    case 0: return 1;
    case 1: return 1 + P.r();
    case 2: return P.c() + P.r();
    default: return 0;
  }
}

std::vector<std::string> hp_basis_names(const PoissonStructure& P, int degree) {
  std::vector<std::string> out;
  if (degree == 0) out.push_back("1");
  if (degree == 1) {
    out.push_back("u");
    for (std::size_t j = 1; j <= P.r(); ++j) out.push_back("v" + std::to_string(j));
  }
  if (degree == 2) {
    for (std::size_t i = 1; i <= P.c(); ++i) out.push_back("w" + std::to_string(i));
    for (std::size_t j = 1; j <= P.r(); ++j) out.push_back("t" + std::to_string(j));
  }
  return out;
}

HPElement zero_element(const PoissonStructure& P, int degree) {
  return {degree, std::vector<Rational>(hp_basis_size(P, degree), 0)};
}

HPElement operator+(HPElement a, const HPElement& b) {
  if (a.degree != b.degree) throw InternalError("adding classes of different degree");
  if (a.coords.empty()) return b;
  if (b.coords.empty()) return a;
  if (a.coords.size() != b.coords.size()) throw InternalError("coordinate size mismatch");
  for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
  return a;
}

HPElement operator-(HPElement a, const HPElement& b) { return a + Rational(-1) * b; }

HPElement operator*(const Rational& c, HPElement a) {
  for (auto& x : a.coords) x *= c;
  return a;
}

std::string render(const HPElement& e, const PoissonStructure& P) {
  auto names = hp_basis_names(P, e.degree);
  std::string out;
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    const Rational& c = e.coords[i];
    if (c == 0) continue;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    Rational mag = abs(c);
    if (names.at(i) == "1")
      out += mag.get_str();
    else
      out += (mag != 1 ? mag.get_str() + "*" : "") + names.at(i);
  }
  return out.empty() ? "0" : out;
}

HPElement to_element(const HP1Class& c) {
  HPElement e{1, {c.alpha}};
  e.coords.insert(e.coords.end(), c.beta.begin(), c.beta.end());
  return e;
}

HPElement to_element(const HP2Class& c) {
  HPElement e{2, c.lambda};
  e.coords.insert(e.coords.end(), c.q.begin(), c.q.end());
  return e;
}

HP1Class to_hp1(const HPElement& e, const PoissonStructure& P) {
  if (e.degree != 1 || e.coords.size() != 1 + P.r()) throw InternalError("not an HP1 element");
  return {e.coords[0], std::vector<Rational>(e.coords.begin() + 1, e.coords.end())};
}

HP2Class to_hp2(const HPElement& e, const PoissonStructure& P) {
  if (e.degree != 2 || e.coords.size() != P.c() + P.r()) throw InternalError("not an HP2 element");
  auto mid = e.coords.begin() + static_cast<std::ptrdiff_t>(P.c());
  return {std::vector<Rational>(e.coords.begin(), mid), std::vector<Rational>(mid, e.coords.end())};
}

Polyvector representative(const HPElement& e, const PoissonStructure& P) {
  switch (e.degree) {
    case 0: return Polyvector(Poly(e.coords.at(0)));
    case 1: return Polyvector(representative(to_hp1(e, P), P));
    case 2: return Polyvector(representative(to_hp2(e, P), P));
    default: throw DomainError("no cohomology in degree " + std::to_string(e.degree));
  }
}

HPElement normalize(const Polyvector& a, const PoissonStructure& P, int jet_order) {
  switch (a.degree()) {
    case 0: {
      const Poly& g = a.function();
      // Casimirs of Pi in formal power series are the constants.
      if (!poisson_differential(P.pi(), a).is_zero() || g.total_degree() > 0)
        throw NotCocycleError("function is not a Casimir");
      return {0, {g.coeff({0, 0})}};
    }
    case 1: return to_element(normalize_hp1(a.vector(), P, jet_order));
    default: return to_element(normalize_hp2_pi(a.bivector(), P));
  }
}

}  // namespace pcoh
