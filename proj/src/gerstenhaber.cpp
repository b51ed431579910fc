#include "pcoh/gerstenhaber.hpp"

#include <sstream>

#include "pcoh/errors.hpp"

namespace pcoh {

std::size_t CanonicalBasis::index(const std::string& name) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].name == name) return i;
  throw InputError("unknown basis element '" + name + "'");
}

HPElement CanonicalBasis::element(const PoissonStructure& P, std::size_t i) const {
  const BasisElement& b = elements.at(i);
  HPElement e = zero_element(P, b.degree);
  e.coords[b.slot] = 1;
  return e;
}

CanonicalBasis canonical_basis(const PoissonStructure& P) {
  CanonicalBasis cb;
  cb.elements.push_back({"1", 0, 0, Polyvector(Poly(1))});
  cb.elements.push_back({"u", 1, 0, Polyvector(P.u())});
  for (std::size_t j = 0; j < P.r(); ++j)
    cb.elements.push_back({"v" + std::to_string(j + 1), 1, j + 1, Polyvector(P.v(j))});
  for (std::size_t i = 0; i < P.c(); ++i)
    cb.elements.push_back({"w" + std::to_string(i + 1), 2, i, Polyvector(P.w_rep(i))});
  for (std::size_t j = 0; j < P.r(); ++j)
    cb.elements.push_back({"t" + std::to_string(j + 1), 2, P.c() + j, Polyvector(P.t(j))});
  return cb;
}

namespace {

std::size_t global_index(const PoissonStructure& P, int degree, std::size_t slot) {
  switch (degree) {
    case 0: return slot;
    case 1: return 1 + slot;
    default: return 2 + P.r() + slot;
  }
}

const HPElement* lookup(const std::vector<TableEntry>& entries, std::size_t i, std::size_t j) {
  for (const auto& e : entries)
    if (e.left == i && e.right == j) return &e.result;
  return nullptr;
}

// Zero of a degree with no cohomology: empty coordinates.
HPElement out_of_range(int degree) { return {degree, {}}; }

template <class Lookup>
HPElement bilinear(const PoissonStructure& P, const HPElement& a, const HPElement& b, int degree,
                   Lookup entry) {
  if (degree < 0 || degree > 2 || a.coords.empty() || b.coords.empty()) return out_of_range(degree);
  HPElement out = zero_element(P, degree);
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords.size(); ++j) {
      if (b.coords[j] == 0) continue;
      const HPElement* e =
          entry(global_index(P, a.degree, i), global_index(P, b.degree, j));
      if (!e) throw InternalError("missing table entry");
      for (std::size_t k = 0; k < out.coords.size(); ++k)
        out.coords[k] += a.coords[i] * b.coords[j] * e->coords[k];
    }
  }
  return out;
}

}  // namespace

const HPElement* GerstenhaberTable::wedge_entry(std::size_t i, std::size_t j) const {
  return lookup(wedge, i, j);
}

const HPElement* GerstenhaberTable::bracket_entry(std::size_t i, std::size_t j) const {
  return lookup(bracket, i, j);
}

HPElement GerstenhaberTable::wedge_of(const PoissonStructure& P, const HPElement& a,
                                      const HPElement& b) const {
  return bilinear(P, a, b, a.degree + b.degree,
                  [&](std::size_t i, std::size_t j) { return wedge_entry(i, j); });
}

HPElement GerstenhaberTable::bracket_of(const PoissonStructure& P, const HPElement& a,
                                        const HPElement& b) const {
  return bilinear(P, a, b, a.degree + b.degree - 1,
                  [&](std::size_t i, std::size_t j) { return bracket_entry(i, j); });
}

GerstenhaberTable wedge_table(const PoissonStructure& P, int jet_order) {
  GerstenhaberTable t;
  t.basis = canonical_basis(P);
  t.jet_order = jet_order;
  const auto& el = t.basis.elements;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (el[i].degree + el[j].degree > 2) continue;
      t.wedge.push_back({i, j, normalize(wedge(el[i].rep, el[j].rep), P, jet_order)});
    }
  return t;
}

GerstenhaberTable bracket_table(const PoissonStructure& P, int jet_order) {
  GerstenhaberTable t;
  t.basis = canonical_basis(P);
  t.jet_order = jet_order;
  const auto& el = t.basis.elements;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      int deg = el[i].degree + el[j].degree - 1;
      if (deg < 0 || deg > 2) continue;
      t.bracket.push_back({i, j, normalize(*sn_bracket(el[i].rep, el[j].rep), P, jet_order)});
    }
  return t;
}

GerstenhaberTable gerstenhaber_table(const PoissonStructure& P, int jet_order) {
  GerstenhaberTable t = wedge_table(P, jet_order);
  t.bracket = bracket_table(P, jet_order).bracket;
  return t;
}

Presentation presentation(const PoissonStructure& P) { return presentation(P.r(), P.c(), P.d); }

Presentation presentation(std::size_t r, std::size_t c, int d) {
  Presentation pr;
  std::vector<std::string> odd = {"u"};
  for (std::size_t j = 1; j <= r; ++j) odd.push_back("v" + std::to_string(j));
  for (const auto& g : odd) pr.generators.emplace_back(g, 1);
  for (std::size_t i = 1; i <= c; ++i) pr.generators.emplace_back("w" + std::to_string(i), 2);

  for (const auto& g : odd) pr.relations.push_back(g + "^2");
  for (std::size_t j = 1; j < odd.size(); ++j) pr.relations.push_back("u*" + odd[j] + "+" + odd[j] + "*u");
  for (std::size_t i = 1; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j) pr.relations.push_back(odd[i] + "*" + odd[j]);

  std::ostringstream first;
  if (odd.size() == 1) {
    first << "K[u]/(u^2)";
  } else {
    first << "K<";
    for (std::size_t i = 0; i < odd.size(); ++i) first << (i ? ", " : "") << odd[i];
    first << ">/(";
    for (std::size_t i = 0; i < pr.relations.size(); ++i) first << (i ? ", " : "") << pr.relations[i];
    first << ")";
  }
  pr.factors.push_back(first.str());
  for (std::size_t i = 1; i <= c; ++i) {
    std::string w = "w" + std::to_string(i);
    pr.relations.push_back(w + "^2");
    pr.factors.push_back("K[" + w + "]/(" + w + "^2)");
  }
  for (std::size_t j = 1; j <= r; ++j)
    pr.identifications.push_back("t" + std::to_string(j) + " = (1/" + std::to_string(d) + ")*u*v" +
                                 std::to_string(j));
  std::ostringstream text;
  for (std::size_t i = 0; i < pr.factors.size(); ++i) text << (i ? " x_K " : "") << pr.factors[i];
  pr.text = text.str();
  return pr;
}

CheckReport presentation_check(const PoissonStructure& P, const GerstenhaberTable& table) {
  CheckReport rep;
  const CanonicalBasis& b = table.basis;
  auto expect = [&](const std::string& what, const HPElement& got, const HPElement& want) {
    ++rep.checked;
    if (!(got == want)) rep.failures.push_back(what);
  };
  std::vector<std::string> odd = {"u"};
  for (std::size_t j = 1; j <= P.r(); ++j) odd.push_back("v" + std::to_string(j));
  for (const auto& x : odd)
    for (const auto& y : odd) {
      HPElement xy = table.wedge_of(P, b.element(P, b.index(x)), b.element(P, b.index(y)));
      HPElement want = zero_element(P, 2);
      if (x == "u" && y != "u") want.coords[P.c() + std::stoul(y.substr(1)) - 1] = P.d;
      if (y == "u" && x != "u") want.coords[P.c() + std::stoul(x.substr(1)) - 1] = -P.d;
      expect(x + "*" + y, xy, want);
    }
  // The unit acts trivially.
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    HPElement e = b.element(P, i);
    expect("1*" + b.elements[i].name, table.wedge_of(P, b.element(P, 0), e), e);
  }
  return rep;
}

CheckReport leibniz_check(const PoissonStructure& P, const GerstenhaberTable& table) {
  CheckReport rep;
  const CanonicalBasis& b = table.basis;
  std::size_t n = b.elements.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        int p = b.elements[i].degree, q = b.elements[j].degree, r = b.elements[k].degree;
        if (p + q > 2 || p + q + r - 1 > 2) {
          ++rep.skipped;
          continue;
        }
        HPElement F = b.element(P, i), G = b.element(P, j), H = b.element(P, k);
        HPElement lhs = table.bracket_of(P, table.wedge_of(P, F, G), H);
        HPElement t1 = table.wedge_of(P, table.bracket_of(P, F, H), G);
        HPElement t2 = table.wedge_of(P, F, table.bracket_of(P, G, H));
        Rational sign = ((r - 1) * p) % 2 == 0 ? 1 : -1;
        HPElement rhs = zero_element(P, p + q + r - 1);
        if (!rhs.coords.empty()) {
          for (std::size_t c = 0; c < rhs.coords.size(); ++c) {
            if (!t1.coords.empty()) rhs.coords[c] += t1.coords[c];
            if (!t2.coords.empty()) rhs.coords[c] += sign * t2.coords[c];
          }
          if (lhs.coords.empty()) lhs = zero_element(P, p + q + r - 1);
        }
        ++rep.checked;
        if (!(lhs == rhs))
          rep.failures.push_back("[" + b.elements[i].name + "^" + b.elements[j].name + ", " +
                                 b.elements[k].name + "]");
      }
  return rep;
}

}  // namespace pcoh
