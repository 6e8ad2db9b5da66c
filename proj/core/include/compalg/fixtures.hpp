#pragma once

#include <string>
#include <vector>

#include "compalg/algebra.hpp"

namespace compalg {

// Desk fixtures used across tests and exposed by the CLI:
//   F1: the ground field, both products the multiplication
//   F2: dual numbers K[x]/(x^2) with the second product zero
//   F3: dual numbers with the second product induced by left
//       multiplication by x (a Nijenhuis deformation of the first)
//   F4: two orthogonal idempotent lines, one product each
//   NC: noncommutative two dimensional algebra e0 e0 = e0, e0 e1 = e1,
//       second product zero
CompatibleAlgebra fixture(const std::string& name);

std::vector<std::string> fixture_names();

// Left multiplication by x on F2/F3, the canonical Nijenhuis operator.
Matrix fixture_nijenhuis_n();

}  // namespace compalg
