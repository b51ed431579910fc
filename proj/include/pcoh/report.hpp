#pragma once

#include <json.hpp>
#include <string>

#include "pcoh/arnold.hpp"
#include "pcoh/cohomology.hpp"
#include "pcoh/gerstenhaber.hpp"
#include "pcoh/oracle.hpp"

namespace pcoh {

using Json = nlohmann::ordered_json;

// Functions render as expression strings, vector fields as {"dx", "dy"},
// bivectors as {"dxdy"}.
Json to_json(const Polyvector& a);
Json to_json(const VectorField& x);
Json to_json(const Bivector& b);

Json to_json(const HP1Class& c, const PoissonStructure& P);
Json to_json(const HP2Class& c, const PoissonStructure& P);
// Nonzero coordinates grouped by family: {"scalar"}, {"u", "v"} or {"w", "t"};
// v and t entries are keyed by the e_j monomial name "e1", "e2", ...
Json element_json(const HPElement& e, const PoissonStructure& P);
Json to_json(const HP2Normalization& n, const PoissonStructure& P);

Json structure_json(const PoissonStructure& P);
std::string structure_text(const PoissonStructure& P);

Json to_json(const GerstenhaberTable& t, const PoissonStructure& P, bool wedge, bool bracket);
std::string table_text(const GerstenhaberTable& t, const PoissonStructure& P, bool wedge,
                       bool bracket);

Json to_json(const DimensionReport& r);
std::string dims_text(const DimensionReport& r);

Json to_json(const VerificationReport& r);
std::string verify_text(const VerificationReport& r);
Json to_json(const SweepSummary& s);
std::string sweep_text(const SweepSummary& s);

std::string hp1_text(const HP1Class& c, const PoissonStructure& P);
std::string hp2_text(const HP2Normalization& n, const PoissonStructure& P);

}  // namespace pcoh
