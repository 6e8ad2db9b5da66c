#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "compalg/algebra.hpp"
#include "compalg/deformation.hpp"
#include "compalg/gerstenhaber.hpp"
#include "compalg/matrix.hpp"

namespace compalg {

// In-memory form of the JSON input format (see README for the schema).
// Products and actions come as sparse {i, j, k, c} triples; operators are
// dense row-major matrices; scalars are integers or "p/q" strings.
struct AlgebraDocument {
  int dim = 0;
  std::vector<std::string> basis;  // optional display names
  CompatibleAlgebra algebra;
  std::optional<CompatibleBimodule> module;
  std::map<std::string, Matrix> operators;
  std::optional<TruncatedDeformation> deformation;
  std::optional<CompatCochain> cocycle;
  std::optional<CompatCochain> cocycle2;
  std::optional<CompatCochain> bracket_f;
  std::optional<CompatCochain> bracket_g;
  std::optional<Vec> sum_unit;

  // Coefficient bimodule used by cohomology-style commands: the module
  // block when present, the adjoint bimodule otherwise.
  CompatibleBimodule coefficients() const;

  bool operator==(const AlgebraDocument& o) const;
};

// Throws InputError with a located message on malformed text, bad indices,
// or invalid scalars.
AlgebraDocument parse_document(const std::string& json_text);

std::string serialize_document(const AlgebraDocument& d);

// Built-in documents for the --fixture flag. F2 ships its canonical
// operators (N = R = left multiplication by x, S = 0) and F3 its sum unit.
AlgebraDocument fixture_document(const std::string& name);

}  // namespace compalg
