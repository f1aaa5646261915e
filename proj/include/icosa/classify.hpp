// The full classification pipeline: S, its geometric orbits, and one record
// per orbit with every column recomputed. Also checks the records against
// the reference rows and handles export.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "icosa/braid.hpp"
#include "icosa/enumerate.hpp"
#include "icosa/expected.hpp"
#include "icosa/group.hpp"
#include "icosa/permg.hpp"
#include "icosa/weyl.hpp"

namespace ico {

struct PipelineOptions {
  int threads = 0;
  std::string cache_path;  // empty: no cache
};

struct Pipeline {
  GroupTable G;
  TripleSet S;
  BraidTables B;
  OrbitPartition orbits;
  bool from_cache = false;
};

// Builds the group, obtains S (from the cache if it is valid, otherwise by
// the OpenMP scan, refreshing the cache), and computes the geometric orbits.
// Throws CountMismatch / OrbitCountMismatch.
Pipeline run_pipeline(const PipelineOptions& opt = {});

struct SolutionClass {
  int degree = 0;
  int genus = 0;
  int walls = 0;
  std::string a5_type;  // sorted letters over {a,b,c,d}
  std::array<int, 4> alcove_x60{};
  std::size_t n = 0;
  Integer group_order;
  std::string group_factored;  // "2^7 3 5"
  std::string group_label;     // "A12", "S3", "1", "2" or empty
  std::array<CycleType, 3> partitions;  // sorted multiset, 1-cycles included
  MTuple rep;
  ThetaVec rep_theta;

  std::vector<std::string> partitions_display() const;
  // Label if present, otherwise the factored order.
  std::string group_string() const { return group_label.empty() ? group_factored : group_label; }
  friend bool operator==(const SolutionClass&, const SolutionClass&) = default;
};

struct ClassTable {
  std::vector<SolutionClass> classes;  // sorted by degree, then alcove point
  std::vector<std::size_t> orbit_index;  // orbit id of each class
  InfinityConvention convention = InfinityConvention::Standard;
};

std::string to_string(InfinityConvention c);

// One record per orbit. The representative is the orbit's least element of
// S. Tries the standard loop-at-infinity convention first and falls back to
// the reversed one if the partitions do not match the reference rows.
ClassTable build_table(const Pipeline& P);
SolutionClass build_class(const Pipeline& P, std::size_t orbit, InfinityConvention conv);

// A5 type of a seven-tuple: the non-trivial classes of M1..M4, sorted.
std::string a5_type_of(const MTuple& m);

struct RowCheck {
  int row = 0;
  bool found = false;
  std::vector<std::string> mismatched;  // field names
};
// Matches each reference row by alcove point and compares every field but
// "Good?". Result is ordered by reference row.
std::vector<RowCheck> compare_table1(const ClassTable& T);
bool all_match(const std::vector<RowCheck>& checks);

struct Table2Check {
  int row = 0;
  bool in_S = false;
  bool row_matches = false;
  // The printed tuple is realised by no triple of the group, and the row's
  // recorded correction was checked instead.
  bool corrected = false;
  std::string detail;
};
std::vector<Table2Check> check_table2(const Pipeline& P, const ClassTable& T);
// Number of triples (M1, M2, M3) of group elements, generating or not, whose
// seven-tuple is m.
std::size_t count_realisations(const GroupTable& G, const MTuple& m);
// The MTuple named by a representative row, via 2cos(pi x).
MTuple mtuple_of(const ExpectedRep& r);

std::string export_json(const ClassTable& T);
std::string export_csv(const ClassTable& T);
std::string export_text(const ClassTable& T);
ClassTable classes_from_json(const std::string& text);

}  // namespace ico
