#include "pcoh/report.hpp"

#include <sstream>

namespace pcoh {

namespace {

std::string join_dims(const std::array<std::size_t, 3>& a) {
  return "(" + std::to_string(a[0]) + ", " + std::to_string(a[1]) + ", " + std::to_string(a[2]) + ")";
}

std::string ename(std::size_t j) { return "e" + std::to_string(j + 1); }

std::string vf_text(const VectorField& x) {
  return "(" + render(x.p) + ")*dx + (" + render(x.q) + ")*dy";
}

const char* mode_name(DimensionReport::Mode m) {
  return m == DimensionReport::Mode::Graded ? "graded" : "jet";
}

}  // namespace

Json to_json(const VectorField& x) { return Json{{"dx", render(x.p)}, {"dy", render(x.q)}}; }
Json to_json(const Bivector& b) { return Json{{"dxdy", render(b.coef)}}; }

Json to_json(const Polyvector& a) {
  switch (a.degree()) {
    case 0: return render(a.function());
    case 1: return to_json(a.vector());
    default: return to_json(a.bivector());
  }
}

Json to_json(const HP1Class& c, const PoissonStructure& P) {
  Json beta = Json::array();
  for (std::size_t j = 0; j < c.beta.size(); ++j)
    if (c.beta[j] != 0)
      beta.push_back({{"e", render(P.pspace.monomials[j])}, {"coeff", to_string(c.beta[j])}});
  return Json{{"alpha", to_string(c.alpha)}, {"beta", beta}};
}

Json to_json(const HP2Class& c, const PoissonStructure& P) {
  Json lambda = Json::array(), q = Json::array();
  for (std::size_t i = 0; i < c.lambda.size(); ++i)
    if (c.lambda[i] != 0)
      lambda.push_back({{"monomial", render(P.milnor.monomials[i])}, {"coeff", to_string(c.lambda[i])}});
  for (std::size_t j = 0; j < c.q.size(); ++j)
    if (c.q[j] != 0) q.push_back({{"e", render(P.pspace.monomials[j])}, {"coeff", to_string(c.q[j])}});
  return Json{{"lambda", lambda}, {"q", q}};
}

Json element_json(const HPElement& e, const PoissonStructure& P) {
  Json out = Json::object();
  auto at = [&](std::size_t i) { return i < e.coords.size() ? e.coords[i] : Rational(0); };
  if (e.degree == 0) {
    out["scalar"] = to_string(at(0));
  } else if (e.degree == 1) {
    if (at(0) != 0) out["u"] = to_string(at(0));
    Json v = Json::array();
    for (std::size_t j = 0; j < P.r(); ++j)
      if (at(1 + j) != 0) v.push_back({ename(j), to_string(at(1 + j))});
    if (!v.empty()) out["v"] = v;
  } else {
    Json w = Json::array(), t = Json::array();
    for (std::size_t i = 0; i < P.c(); ++i)
      if (at(i) != 0) w.push_back({"w" + std::to_string(i + 1), to_string(at(i))});
    for (std::size_t j = 0; j < P.r(); ++j)
      if (at(P.c() + j) != 0) t.push_back({ename(j), to_string(at(P.c() + j))});
    if (!w.empty()) out["w"] = w;
    if (!t.empty()) out["t"] = t;
  }
  return out;
}

Json to_json(const HP2Normalization& n, const PoissonStructure& P) {
  Json trace = Json::array();
  for (const auto& c : n.trace) {
    Json chain = Json::array();
    for (const auto& x : c.chain) chain.push_back(to_json(x));
    Json row{{"degree", c.degree}};
    row["k"] = c.k ? Json(*c.k) : Json(nullptr);
    row["cofactor"] = to_json(c.cofactor);
    row["chain"] = chain;
    row["contribution"] = to_json(c.contribution, P);
    trace.push_back(row);
  }
  return Json{{"degree", 2},
              {"class", to_json(n.cls, P)},
              {"element", render(to_element(n.cls), P)},
              {"trace", trace}};
}

Json structure_json(const PoissonStructure& P) {
  auto dims = hp_dimensions(P);
  Json milnor = Json::array(), es = Json::array(), vs = Json::array();
  for (std::size_t i = 0; i < P.c(); ++i)
    milnor.push_back({{"name", "w" + std::to_string(i + 1)},
                      {"monomial", render(P.milnor.monomials[i])},
                      {"degree", P.milnor.degrees[i]}});
  for (std::size_t j = 0; j < P.r(); ++j) {
    es.push_back({{"name", ename(j)}, {"monomial", render(P.pspace.monomials[j])}});
    vs.push_back(to_json(P.v(j)));
  }
  return Json{{"f", render(P.f)},
              {"h", render(P.h)},
              {"weights", {P.w.w1, P.w.w2}},
              {"d", P.d},
              {"s", P.s()},
              {"c", P.c()},
              {"r", P.r()},
              {"dims", {dims[0], dims[1], dims[2], dims[3]}},
              {"milnor_basis", milnor},
              {"p_space", es},
              {"representatives", {{"u", to_json(P.u())}, {"v", vs}}}};
}

std::string structure_text(const PoissonStructure& P) {
  auto dims = hp_dimensions(P);
  std::ostringstream os;
  os << "f = " << render(P.f) << "\nh = " << render(P.h) << "\nweights = (" << P.w.w1 << ", " << P.w.w2
     << "), d = " << P.d << ", d - w1 - w2 = " << P.s() << "\n";
  os << "c = " << P.c() << ", r = " << P.r() << "\n";
  os << "dim HP^0..3 = (" << dims[0] << ", " << dims[1] << ", " << dims[2] << ", " << dims[3] << ")\n";
  os << "Milnor basis:\n";
  for (std::size_t i = 0; i < P.c(); ++i)
    os << "  w" << i + 1 << " = " << render(P.milnor.monomials[i]) << " dx^dy  (degree "
       << P.milnor.degrees[i] << ")\n";
  os << "P_{d-w1-w2}:";
  if (P.r() == 0) os << " 0";
  os << "\n";
  for (std::size_t j = 0; j < P.r(); ++j) os << "  e" << j + 1 << " = " << render(P.pspace.monomials[j]) << "\n";
  os << "representatives:\n  u = " << vf_text(P.u()) << "\n";
  for (std::size_t j = 0; j < P.r(); ++j) os << "  v" << j + 1 << " = " << vf_text(P.v(j)) << "\n";
  return os.str();
}

Json to_json(const GerstenhaberTable& t, const PoissonStructure& P, bool wedge, bool bracket) {
  auto rows = [&](const std::vector<TableEntry>& entries) {
    Json a = Json::array();
    for (const auto& e : entries)
      a.push_back({{"left", t.basis.elements[e.left].name},
                    {"right", t.basis.elements[e.right].name},
                    {"result", element_json(e.result, P)},
                    {"text", render(e.result, P)}});
    return a;
  };
  Json out = Json::object();
  if (wedge) out["wedge"] = rows(t.wedge);
  if (bracket) out["bracket"] = rows(t.bracket);
  out["jet_order"] = t.jet_order;
  return out;
}

std::string table_text(const GerstenhaberTable& t, const PoissonStructure& P, bool wedge, bool bracket) {
  std::ostringstream os;
  auto dump = [&](const char* title, const char* op, const std::vector<TableEntry>& entries) {
    std::size_t nonzero = 0;
    os << title << ":\n";
    for (const auto& e : entries) {
      if (e.result.is_zero()) continue;
      ++nonzero;
      const auto& l = t.basis.elements[e.left].name;
      const auto& r = t.basis.elements[e.right].name;
      if (*op == '[')
        os << "  [" << l << ", " << r << "] = " << render(e.result, P) << "\n";
      else
        os << "  " << l << " ^ " << r << " = " << render(e.result, P) << "\n";
    }
    os << "  (" << entries.size() - nonzero << " of " << entries.size() << " entries vanish)\n";
  };
  if (wedge) dump("wedge", "^", t.wedge);
  if (bracket) dump("bracket", "[", t.bracket);
  return os.str();
}

Json to_json(const DimensionReport& r) {
  Json out{{"mode", mode_name(r.mode)}, {"order", r.order}, {"totals", r.totals}};
  if (r.mode == DimensionReport::Mode::Graded) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"degree", row.degree},
                      {"dim", row.dim},
                      {"rank_out", row.rank_out},
                      {"rank_in", row.rank_in},
                      {"hp", row.hp}});
    out["rows"] = rows;
  } else {
    out["check_order"] = r.check_order;
    out["totals_check"] = r.totals_check ? Json(*r.totals_check) : Json(nullptr);
    out["stabilized"] = r.stabilized;
  }
  return out;
}

std::string dims_text(const DimensionReport& r) {
  std::ostringstream os;
  if (r.mode == DimensionReport::Mode::Graded) {
    os << "graded, degrees <= " << r.order << "\n";
    os << "  D   dim(C0,C1,C2)   HP(0,1,2)\n";
    for (const auto& row : r.rows) {
      if (row.hp == std::array<std::size_t, 3>{}) continue;
      os << "  " << row.degree << "   " << join_dims(row.dim) << "   " << join_dims(row.hp) << "\n";
    }
    os << "total " << join_dims(r.totals) << "\n";
  } else {
    os << "jet order " << r.order << ": " << join_dims(r.totals) << "\n";
    if (r.totals_check) os << "jet order " << r.check_order << ": " << join_dims(*r.totals_check) << "\n";
    os << (r.stabilized ? "stabilized" : "NOT stabilized") << "\n";
  }
  return os.str();
}

Json to_json(const VerificationReport& r) {
  auto layer = [](const std::vector<VerificationEntry>& es) {
    Json a = Json::array();
    for (const auto& e : es)
      a.push_back({{"name", e.name},
                   {"expected", e.expected},
                   {"computed", e.computed},
                   {"status", to_string(e.status)},
                   {"note", e.note}});
    return a;
  };
  return Json{{"type", r.type.label()},
              {"dims", layer(r.dims)},
              {"raw_brackets", layer(r.raw_brackets)},
              {"presentation", layer(r.presentation)},
              {"summary",
               {{"pass", r.count(Status::Pass)},
                {"fail", r.count(Status::Fail)},
                {"known-discrepancy", r.count(Status::KnownDiscrepancy)}}}};
}

std::string verify_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.type.label() << "\n";
  auto layer = [&](const char* title, const std::vector<VerificationEntry>& es) {
    os << title << ":\n";
    for (const auto& e : es) {
      os << "  [" << to_string(e.status) << "] " << e.name << ": expected " << e.expected << ", computed "
         << e.computed << "\n";
      if (!e.note.empty()) os << "      " << e.note << "\n";
    }
  };
  layer("dims", r.dims);
  layer("raw_brackets", r.raw_brackets);
  layer("presentation", r.presentation);
  os << "pass " << r.count(Status::Pass) << ", fail " << r.count(Status::Fail) << ", known-discrepancy "
     << r.count(Status::KnownDiscrepancy) << "\n";
  return os.str();
}

Json to_json(const SweepSummary& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows)
    rows.push_back({{"type", r.label}, {"pass", r.pass}, {"fail", r.fail}, {"known-discrepancy", r.known}});
  return Json{{"rows", rows},
              {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"known-discrepancy", s.known}}}};
}

std::string sweep_text(const SweepSummary& s) {
  std::ostringstream os;
  std::size_t width = 4;
  for (const auto& r : s.rows) width = std::max(width, r.label.size());
  os << std::string(width - 4, ' ') << "type  pass  fail  known\n";
  for (const auto& r : s.rows) {
    std::string p = std::to_string(r.pass), f = std::to_string(r.fail), k = std::to_string(r.known);
    os << std::string(width - r.label.size(), ' ') << r.label << std::string(6 - p.size(), ' ') << p
       << std::string(6 - f.size(), ' ') << f << std::string(7 - k.size(), ' ') << k << "\n";
  }
  os << "total pass " << s.pass << ", fail " << s.fail << ", known-discrepancy " << s.known << "\n";
  return os.str();
}

std::string hp1_text(const HP1Class& c, const PoissonStructure& P) {
  return "HP^1 class: " + render(to_element(c), P) + "\n";
}

std::string hp2_text(const HP2Normalization& n, const PoissonStructure& P) {
  std::ostringstream os;
  os << "HP^2 class: " << render(to_element(n.cls), P) << "\n";
  for (const auto& c : n.trace) {
    os << "component of degree " << c.degree;
    if (c.k) os << " (k = " << *c.k << ")";
    os << "\n  cofactor X = " << vf_text(c.cofactor) << "\n";
    for (std::size_t i = 0; i < c.chain.size(); ++i) os << "  X" << i << " = " << vf_text(c.chain[i]) << "\n";
    os << "  contributes " << render(to_element(c.contribution), P) << "\n";
  }
  return os.str();
}

}  // namespace pcoh
