// The full pipeline is a few seconds of work; suites share one copy.
#pragma once

#include "icosa/classify.hpp"

namespace fixture {

const ico::Pipeline& pipeline();
const ico::ClassTable& table();
// Reference row number -> computed class.
const ico::SolutionClass& class_of_row(int row);
std::size_t orbit_of_row(int row);

}  // namespace fixture
