#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "pcoh/errors.hpp"
#include "pcoh/report.hpp"

namespace pcoh::cli {

namespace {

struct Options {
  std::string f, h, weights, type, lambda, mu, basis_path;
  std::optional<int> jet_order;
  bool json = false;

  // normalize
  std::string bivector, vector, function, cocycle, element;
  // verify / oracle
  bool sweep = false;
  int p_max = 3;
  std::string mode;
  std::optional<int> max_degree;
};

struct Input {
  std::optional<SingularityType> type;
  PoissonStructure P;
};

WeightSystem parse_weights(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--weights expects w1,w2");
  try {
    std::size_t used1 = 0, used2 = 0;
    std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    WeightSystem w{std::stoi(a, &used1), std::stoi(b, &used2)};
    if (used1 != a.size() || used2 != b.size()) throw InputError("--weights expects integers");
    if (w.w1 <= 0 || w.w2 <= 0) throw InputError("weights must be positive");
    return w;
  } catch (const std::logic_error&) {
    throw InputError("--weights expects w1,w2");
  }
}

Monomial parse_monomial(const std::string& text) {
  Poly p = parse_poly(text);
  if (p.size() != 1 || p.terms().begin()->second != 1) throw InputError("not a monomial: " + text);
  return p.terms().begin()->first;
}

// One monomial per line ('#' starts a comment), or a JSON array of strings.
std::vector<Monomial> read_basis(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read basis override " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::vector<Monomial> out;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw InputError(std::string("basis override: ") + e.what());
    }
    for (const auto& m : j) {
      if (!m.is_string()) throw InputError("basis override entries must be strings");
      out.push_back(parse_monomial(m.get<std::string>()));
    }
    return out;
  }
  std::string line;
  std::istringstream lines(text);
  while (std::getline(lines, line)) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_monomial(line));
  }
  return out;
}

Input resolve(const Options& o) {
  bool inline_input = !o.f.empty() || !o.h.empty() || !o.weights.empty();
  if (inline_input == !o.type.empty())
    throw InputError("give either --type or --f/--weights (exactly one input source)");
  Input in;
  std::optional<std::vector<Monomial>> basis;
  if (!o.basis_path.empty()) basis = read_basis(o.basis_path);
  if (!o.type.empty()) {
    std::optional<Rational> l, m;
    if (!o.lambda.empty()) l = parse_rational(o.lambda);
    if (!o.mu.empty()) m = parse_rational(o.mu);
    in.type = parse_type(o.type, l, m);
    if (basis) {
      NormalForm nf = normal_form(*in.type);
      in.P = make_structure(nf.f, nf.h, nf.w, *basis);
    } else {
      in.P = instantiate(*in.type);
    }
  } else {
    if (!o.lambda.empty() || !o.mu.empty()) throw InputError("--lambda/--mu need --type");
    if (o.f.empty()) throw InputError("--f is required");
    if (o.weights.empty()) throw InputError("--weights is required with --f");
    WeightSystem w = parse_weights(o.weights);
    Poly f = parse_poly(o.f);
    Poly h = o.h.empty() ? Poly() : parse_poly(o.h);
    in.P = basis ? make_structure(f, h, w, *basis) : make_structure(f, h, w);
  }
  return in;
}

int jet_order(const Options& o, const PoissonStructure& P) {
  if (!o.jet_order) return P.default_jet_order();
  if (*o.jet_order < 2 * P.d)
    throw InputError("--jet-order must be at least 2d = " + std::to_string(2 * P.d));
  return *o.jet_order;
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  Input in = resolve(o);
  Json j = structure_json(in.P);
  std::string text = structure_text(in.P);
  if (in.type) {
    j["type"] = in.type->label();
    text = in.type->label() + "\n" + text;
  }
  emit(out, o, j, text);
  return kOk;
}

Polyvector parse_cocycle(const Options& o, const PoissonStructure& P) {
  int given = !o.bivector.empty() + !o.vector.empty() + !o.function.empty() + !o.cocycle.empty() +
              !o.element.empty();
  if (given != 1)
    throw InputError("give exactly one of --bivector, --vector, --function, --cocycle, --element");
  if (!o.bivector.empty()) return Bivector{parse_poly(o.bivector)};
  if (!o.function.empty()) return parse_poly(o.function);
  if (!o.vector.empty()) {
    auto comma = o.vector.find(',');
    if (comma == std::string::npos) throw InputError("--vector expects P,Q");
    return VectorField{parse_poly(o.vector.substr(0, comma)), parse_poly(o.vector.substr(comma + 1))};
  }
  if (!o.element.empty()) {
    CanonicalBasis cb = canonical_basis(P);
    return cb.elements.at(cb.index(o.element)).rep;
  }
  // {"dxdy": ...}, {"dx": ..., "dy": ...} or a bare function string
  Json j;
  try {
    j = Json::parse(o.cocycle);
  } catch (const Json::exception&) {
    return parse_poly(o.cocycle);
  }
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (!j.is_object()) throw InputError("--cocycle: expected an object or expression");
  auto field = [&](const char* key) {
    if (!j.contains(key)) return Poly();
    if (!j[key].is_string()) throw InputError(std::string("--cocycle: ") + key + " must be a string");
    return parse_poly(j[key].get<std::string>());
  };
  if (j.contains("dxdy")) {
    if (j.size() != 1) throw InputError("--cocycle: mixed polyvector degrees");
    return Bivector{field("dxdy")};
  }
  if (j.contains("dx") || j.contains("dy")) {
    if (j.size() > 2 || (j.size() == 2 && !(j.contains("dx") && j.contains("dy"))))
      throw InputError("--cocycle: unknown keys");
    return VectorField{field("dx"), field("dy")};
  }
  throw InputError("--cocycle: expected keys dxdy or dx/dy");
}

int cmd_normalize(const Options& o, std::ostream& out) {
  Input in = resolve(o);
  const PoissonStructure& P = in.P;
  Polyvector a = parse_cocycle(o, P);
  int N = jet_order(o, P);
  Json j;
  std::string text;
  switch (a.degree()) {
    case 2: {
      HP2Normalization n = normalize_hp2_traced(a.bivector(), P);
      j = to_json(n, P);
      text = hp2_text(n, P);
      break;
    }
    case 1: {
      HP1Class c = normalize_hp1(a.vector(), P, N);
      j = Json{{"degree", 1}, {"class", to_json(c, P)}, {"element", render(to_element(c), P)}, {"jet_order", N}};
      text = hp1_text(c, P);
      break;
    }
    default: {
      HPElement e = normalize(a, P, N);
      j = Json{{"degree", 0}, {"element", render(e, P)}};
      text = "HP^0 class: " + render(e, P) + "\n";
    }
  }
  j["input"] = to_json(a);
  emit(out, o, j, text);
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out, bool wedge, bool bracket) {
  Input in = resolve(o);
  int N = jet_order(o, in.P);
  GerstenhaberTable t = wedge && bracket ? gerstenhaber_table(in.P, N)
                        : wedge          ? wedge_table(in.P, N)
                                         : bracket_table(in.P, N);
  emit(out, o, to_json(t, in.P, wedge, bracket), table_text(t, in.P, wedge, bracket));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.sweep) {
    if (!o.type.empty() || !o.f.empty()) throw InputError("--sweep takes no input structure");
    if (o.p_max < 1) throw InputError("--p-max must be positive");
    SweepSummary s = catalog_sweep(o.p_max);
    emit(out, o, to_json(s), sweep_text(s));
    return s.ok() ? kOk : kVerifyFailed;
  }
  if (o.type.empty()) throw InputError("verify needs --type or --sweep");
  if (!o.f.empty() || !o.h.empty() || !o.weights.empty() || !o.basis_path.empty())
    throw InputError("verify works on catalog types only");
  Input in = resolve(o);
  int N = o.jet_order ? jet_order(o, in.P) : 0;
  VerificationReport r = verify(*in.type, N);
  emit(out, o, to_json(r), verify_text(r));
  return r.ok() ? kOk : kVerifyFailed;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  Input in = resolve(o);
  const PoissonStructure& P = in.P;
  std::string mode = o.mode.empty() ? (P.h.is_zero() ? "graded" : "jet") : o.mode;
  DimensionReport r;
  if (mode == "graded") {
    if (!P.h.is_zero()) throw InputError("graded mode needs h = 0");
    int D = o.max_degree ? *o.max_degree : 2 * P.d;
    if (D < 0) throw InputError("--max-degree must be nonnegative");
    r = graded_dims(P, D);
  } else if (mode == "jet") {
    r = jet_dims(P, jet_order(o, P));
  } else {
    throw InputError("--mode must be graded or jet");
  }
  emit(out, o, to_json(r), dims_text(r));
  return r.stabilized ? kOk : kJetUnstable;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--f", o.f, "f as a polynomial in x, y");
  sub->add_option("--h", o.h, "h (default 0)");
  sub->add_option("--weights", o.weights, "w1,w2");
  sub->add_option("--type", o.type, "catalog selector: A3+, D4-, E7, ...");
  sub->add_option("--lambda", o.lambda, "rational parameter");
  sub->add_option("--mu", o.mu, "rational parameter");
  sub->add_option("--basis-override", o.basis_path, "file with Milnor basis monomials");
  sub->add_option("--jet-order", o.jet_order, "jet order N >= 2d (default 4d)");
  sub->add_flag("--json", o.json, "JSON output");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poisson cohomology of f(1+h) dx^dy"};
  app.set_help_flag("--help", "print help");  // -h would clash with --h
  app.require_subcommand(1);
  Options o;

  auto* coh = app.add_subcommand("cohomology", "dimensions and canonical basis");
  add_input(coh, o);
  auto* norm = app.add_subcommand("normalize", "reduce a cocycle to canonical coordinates");
  add_input(norm, o);
  norm->add_option("--bivector", o.bivector, "coefficient of dx^dy");
  norm->add_option("--vector", o.vector, "P,Q for P dx + Q dy");
  norm->add_option("--function", o.function, "a function");
  norm->add_option("--cocycle", o.cocycle, "JSON polyvector: {\"dxdy\": ...} or {\"dx\": ..., \"dy\": ...}");
  norm->add_option("--element", o.element, "canonical basis element name");
  auto* br = app.add_subcommand("brackets", "Schouten bracket table");
  add_input(br, o);
  auto* we = app.add_subcommand("wedge", "wedge product table");
  add_input(we, o);
  auto* ver = app.add_subcommand("verify", "check a catalog type against its recorded structure");
  add_input(ver, o);
  ver->add_flag("--sweep", o.sweep, "verify the whole catalog");
  ver->add_option("--p-max", o.p_max, "catalog bound for --sweep");
  auto* ora = app.add_subcommand("oracle", "independent dimension count");
  add_input(ora, o);
  ora->add_option("--mode", o.mode, "graded or jet");
  ora->add_option("--max-degree", o.max_degree, "graded mode degree bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (coh->parsed()) return cmd_cohomology(o, out);
    if (norm->parsed()) return cmd_normalize(o, out);
    if (br->parsed()) return cmd_table(o, out, false, true);
    if (we->parsed()) return cmd_table(o, out, true, false);
    if (ver->parsed()) return cmd_verify(o, out);
    return cmd_oracle(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NotCocycleError& e) {
    err << "error: not a cocycle: " << e.what() << "\n";
    return kNotCocycle;
  } catch (const JetInstabilityError& e) {
    err << "error: jet instability: " << e.what() << "\n";
    return kJetUnstable;
  }
}

}  // namespace pcoh::cli
