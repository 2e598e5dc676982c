#pragma once

// JSON forms of fields, Lie algebras and matrices.
//
// Algebra: {"p":2,"k":2,"modulus":"t^2+t+1","dim":3,
//           "bracket":[{"i":1,"j":2,"value":["0","0","1"]}, ...]}
// with 1-based i < j and field elements written as polynomials in u.
// Matrix:  {"matrix":[["1","0"],["0","u"]]}, entry [i][j] is row i, column j.

#include <string>

#include <json.hpp>

#include "derinv/lie.hpp"

namespace derinv::io {

using nlohmann::json;

/// Uses "modulus" when present, otherwise make_field(p, k).
FieldRef field_from_json(const json& j);
json field_to_json(const FieldRef& F);

LieAlgebra algebra_from_json(const json& j);
json algebra_to_json(const LieAlgebra& L);

LinearMap map_from_json(const json& j, const FieldRef& F);
json map_to_json(const LinearMap& D);

/// Throws InvalidArgument on unreadable files or malformed JSON.
json read_json_file(const std::string& path);

}  // namespace derinv::io
