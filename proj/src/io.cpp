#include "derinv/io.hpp"

#include <fstream>

namespace derinv::io {

namespace {

FqElem elem_from_json(const json& v, const FieldRef& F) {
  if (v.is_string()) return parse_fq_elem(F, v.get<std::string>());
  if (v.is_number_integer()) return FqElem::from_int(F, v.get<long>());
  throw InvalidArgument("field element must be a string or an integer: " + v.dump());
}

std::size_t require_index(const json& e, const char* key, std::size_t dim) {
  if (!e.contains(key) || !e[key].is_number_unsigned()) throw InvalidArgument(std::string("bracket entry needs an integer '") + key + "'");
  const auto v = e[key].get<std::size_t>();
  if (v < 1 || v > dim) throw InvalidArgument(std::string("bracket index '") + key + "' out of range: " + std::to_string(v));
  return v - 1;
}

}  // namespace

FieldRef field_from_json(const json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    if (j.contains("modulus")) {
      std::string text = j.at("modulus").get<std::string>();
      for (auto& c : text) {
        if (c == 'u') c = 't';
      }
      FieldRef F = FqField::with_modulus(parse_fp_poly(text, p));
      if (j.contains("k") && j.at("k").get<unsigned>() != F->k()) throw InvalidArgument("'k' does not match the degree of 'modulus'");
      return F;
    }
    return make_field(p, j.value("k", 1U));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad field description: ") + e.what());
  }
}

json field_to_json(const FieldRef& F) {
  return {{"p", F->p()}, {"k", F->k()}, {"modulus", to_string(F->modulus(), 't')}};
}

LieAlgebra algebra_from_json(const json& j) {
  const FieldRef F = field_from_json(j);
  std::size_t dim = 0;
  try {
    dim = j.at("dim").get<std::size_t>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("algebra needs a positive 'dim': ") + e.what());
  }
  std::vector<LieAlgebra::Entry> entries;
  if (j.contains("bracket")) {
    if (!j["bracket"].is_array()) throw InvalidArgument("'bracket' must be an array");
    for (const auto& e : j["bracket"]) {
      const std::size_t i = require_index(e, "i", dim);
      const std::size_t k = require_index(e, "j", dim);
      if (!e.contains("value") || !e["value"].is_array()) throw InvalidArgument("bracket entry needs a 'value' array");
      Vec value;
      for (const auto& v : e["value"]) value.push_back(elem_from_json(v, F));
      entries.push_back({i, k, std::move(value)});
    }
  }
  return LieAlgebra::from_entries(F, dim, entries);
}

json algebra_to_json(const LieAlgebra& L) {
  json out = field_to_json(L.field());
  out["dim"] = L.dim();
  json bracket = json::array();
  for (const auto& e : L.entries()) {
    json value = json::array();
    for (const auto& x : e.value) value.push_back(x.to_string());
    bracket.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"value", value}});
  }
  out["bracket"] = bracket;
  return out;
}

LinearMap map_from_json(const json& j, const FieldRef& F) {
  if (!j.contains("matrix") || !j["matrix"].is_array()) throw InvalidArgument("matrix file needs a 'matrix' array");
  const auto& rows = j["matrix"];
  const std::size_t n = rows.size();
  std::vector<FqElem> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw InvalidArgument("matrix must be square");
    for (const auto& v : row) entries.push_back(elem_from_json(v, F));
  }
  return LinearMap(F, n, std::move(entries));
}

json map_to_json(const LinearMap& D) {
  json rows = json::array();
  for (std::size_t i = 0; i < D.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < D.size(); ++k) row.push_back(D.at(i, k).to_string());
    rows.push_back(row);
  }
  return {{"matrix", rows}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

}  // namespace derinv::io
