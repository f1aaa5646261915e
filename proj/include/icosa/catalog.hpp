// The built-in catalogue of explicit parametrised solutions and their
// verification.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icosa/symfield.hpp"

namespace ico {

struct LeadingBranch {
  Rational s0;
  std::optional<Rational> u0;
};

struct CatalogEntry {
  std::string id;
  std::string alias;  // alternative name, may be empty
  std::string anchor;
  ThetaVec theta;
  std::vector<ThetaVec> family;  // further parameters on the same family line
  CurveFieldElem::Modulus modulus;  // null for rational curves
  CurveFieldElem y, t;
  std::vector<ImplicitTerm> implicit;  // empty if none
  std::optional<LeadingBranch> leading;
  std::string note;
  // Values as originally printed where the catalogue corrects them; they are
  // checked to fail, documenting that the correction is needed.
  std::optional<ThetaVec> printed_theta;
  std::optional<CurveFieldElem> printed_y;
};

// Parsed once from the embedded JSON.
const std::vector<CatalogEntry>& catalog();
std::vector<CatalogEntry> parse_catalog(const std::string& json_text);
// Looks up by id or alias; throws std::out_of_range.
const CatalogEntry& find_entry(const std::string& id);

struct EntryReport {
  std::string id;
  ThetaVec theta;
  bool residual_zero = false;
  std::string residual;  // abbreviated, empty when zero
  std::optional<bool> implicit_ok;
  std::vector<std::pair<ThetaVec, bool>> family;
  // true if the uncorrected printed data fails, as it should
  std::optional<bool> printed_fails;
  double seconds = 0;

  bool pass() const;
};

EntryReport verify_entry(const CatalogEntry& e);
// Throws VerificationFailed with the residual if the entry does not pass.
EntryReport verify_entry_or_throw(const CatalogEntry& e);

// lim y/t on the designated branch; throws std::logic_error if the entry has none.
Rational entry_leading(const CatalogEntry& e);

}  // namespace ico
