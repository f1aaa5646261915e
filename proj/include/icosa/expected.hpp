// Reference rows for the 52 classes and the representative seven-tuples,
// compiled into the library from data/table1.json and data/table2.json.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icosa/exact.hpp"

namespace ico {

namespace embedded {
std::string_view table1_json();
std::string_view table2_json();
std::string_view catalog_json();
}  // namespace embedded

struct ExpectedRow {
  int row = 0;
  int degree = 0;
  int genus = 0;
  int walls = 0;
  std::string a5_type;  // sorted letters, e.g. "aaab"
  std::array<int, 4> alcove_x60{};
  std::size_t n = 0;
  std::string good;   // carried along, never checked
  std::string group;  // "A12", "S3", "1", "2" or a factored order "2^7 3 5"
  std::vector<std::string> partitions;  // compact notation, last entry repeated
};

struct ExpectedRep {
  int row = 0;
  std::array<Rational, 4> theta;
  std::array<Rational, 3> sigma;  // (sigma12, sigma23, sigma13)
  // Correction for a misprinted row; only consulted when the printed tuple
  // is not realised by any triple at all.
  std::optional<std::array<Rational, 4>> erratum_theta;
  std::string erratum_note;
};

const std::vector<ExpectedRow>& expected_table1();
const std::vector<ExpectedRep>& expected_table2();

// Order named by a group entry as printed: "A_k" -> k!/2, "S_k" -> k!,
// otherwise the product of the listed prime powers.
Integer order_of_group_entry(std::string_view entry);

}  // namespace ico
