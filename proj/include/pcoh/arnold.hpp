#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcoh/cohomology.hpp"
#include "pcoh/gerstenhaber.hpp"

namespace pcoh {

enum class Family { AEven, AOdd, DEven, DOdd, E6, E7, E8 };

// Simple singularity normal form f (1 + h). sign is +1/-1 for the A_odd and
// D_even families and +1 otherwise.
struct SingularityType {
  Family family = Family::E6;
  int p = 0;
  int sign = 1;
  Rational lambda = 0, mu = 0;

  std::string name() const;   // "A3+", "D5", "E7"
  std::string label() const;  // name plus parameters
};

// Number of continuous parameters: 0, 1 (lambda) or 2 (lambda, mu).
int param_count(Family f);

// Selectors: A<n> (A<odd> needs a +/- suffix), D<n> (D<even> needs a
// suffix), E6, E7, E8. Parameters the family does not take are rejected;
// missing ones default to 0.
SingularityType parse_type(std::string_view selector, const std::optional<Rational>& lambda = {},
                           const std::optional<Rational>& mu = {});

// Validates p and the sign for the family.
void validate(const SingularityType& t);

struct NormalForm {
  Poly f, h;
  WeightSystem w;
  std::vector<Monomial> basis;  // Milnor basis order used by the fixtures
};

NormalForm normal_form(const SingularityType& t);
PoissonStructure instantiate(const SingularityType& t);

struct Generator {
  std::string name;
  HPElement value;  // canonical coordinates
};

// [left, right] = rhs, both sides in generator names of one reading.
struct Relation {
  std::string left, right;
  HPElement rhs;
  std::string rhs_text;
};

struct Reading {
  std::vector<Generator> odd, even;
  std::vector<Relation> relations;  // the nontrivial brackets; all others vanish
};

struct RawBracket {
  std::size_t i = 0, j = 0;  // [v_i, w_j], 1-based
  HPElement value;
  std::optional<HPElement> corrected;
  std::string note;
};

struct ExpectedFixture {
  std::size_t c = 0, r = 0;  // as stated for the family
  std::optional<std::size_t> corrected_r;
  std::vector<RawBracket> raw;  // unlisted [v_i, w_j] vanish
  // The primed presentation as printed, and with the recorded corrections.
  // Relations correspond index by index.
  Reading recorded, corrected;
  std::vector<std::string> notes;
};

ExpectedFixture expected_fixture(const SingularityType& t, const PoissonStructure& P);

enum class Status { Pass, Fail, KnownDiscrepancy };
std::string to_string(Status s);

struct VerificationEntry {
  std::string name, expected, computed;
  Status status = Status::Pass;
  std::string note;
};

struct VerificationReport {
  SingularityType type;
  std::vector<VerificationEntry> dims, raw_brackets, presentation;

  std::size_t count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
};

// jet_order 0 selects 4d.
VerificationReport verify(const SingularityType& t, int jet_order = 0);

// Every family and sign branch with p <= p_max; parameters on the grid
// {0, 1, -1, 1/2}. E types are included for p_max >= 2.
std::vector<SingularityType> catalog(int p_max);

struct SweepRow {
  std::string label;
  std::size_t pass = 0, fail = 0, known = 0;
};

struct SweepSummary {
  std::vector<SweepRow> rows;
  std::size_t pass = 0, fail = 0, known = 0;
  bool ok() const { return fail == 0; }
};

SweepSummary catalog_sweep(int p_max);

}  // namespace pcoh
