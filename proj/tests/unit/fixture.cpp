#include "fixture.hpp"

#include <stdexcept>

namespace fixture {

const ico::Pipeline& pipeline() {
  static const ico::Pipeline P = ico::run_pipeline();
  return P;
}

const ico::ClassTable& table() {
  static const ico::ClassTable T = ico::build_table(pipeline());
  return T;
}

namespace {

std::size_t class_index(int row) {
  for (const auto& r : ico::expected_table1()) {
    if (r.row != row) continue;
    const auto& T = table();
    for (std::size_t i = 0; i < T.classes.size(); ++i)
      if (T.classes[i].alcove_x60 == r.alcove_x60) return i;
  }
  throw std::out_of_range("no class for row " + std::to_string(row));
}

}  // namespace

const ico::SolutionClass& class_of_row(int row) { return table().classes[class_index(row)]; }
std::size_t orbit_of_row(int row) { return table().orbit_index[class_index(row)]; }

}  // namespace fixture
