#include "gelfand/json_io.hpp"

#include <fstream>

namespace gelfand {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorCode::InvalidInput, "'" + where + "': " + what);
}

std::uint64_t as_uint(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + "/" + key, "missing");
  return *it;
}

}  // namespace

Json field_to_json(const Field& field) {
  Json j;
  j["characteristic"] = field.characteristic();
  j["extension_degree"] = field.degree();
  if (!field.is_prime_field()) {
    const Field base = field.base();
    Json mod = Json::array();
    for (Code c : field.modulus_codes()) mod.push_back(element_to_json(base, c));
    j["modulus"] = mod;
    if (!base.is_prime_field()) j["base"] = field_to_json(base);
  }
  return j;
}

Json element_to_json(const Field& field, Code a) {
  if (field.is_prime_field()) return a;
  Json out = Json::array();
  const Field base = field.base();
  for (Code c : field.coefficients(a)) out.push_back(element_to_json(base, c));
  return out;
}

Json polynomial_to_json(const Polynomial& f) {
  Json out = Json::array();
  for (Code c : f.coeffs()) out.push_back(element_to_json(f.field(), c));
  return out;
}

Json invariant_to_json(const ConjugacyInvariant& inv) {
  Json out = Json::array();
  for (const auto& f : inv.factors) out.push_back(polynomial_to_json(f));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["field"] = field_to_json(m.field());
  j["size"] = m.rows();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(element_to_json(m.field(), m(i, k)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

Field field_from_json(const Json& j, const std::string& where) {
  const auto p = as_uint(member(j, "characteristic", where), where + "/characteristic");
  if (p > 0xFFFFFFFFull || !is_prime(p)) bad(where + "/characteristic", "not a prime");
  const auto d = as_uint(member(j, "extension_degree", where), where + "/extension_degree");
  if (d == 0) bad(where + "/extension_degree", "must be at least 1");
  const auto prime = static_cast<std::uint32_t>(p);
  if (d == 1) {
    if (j.contains("base")) bad(where + "/base", "not allowed when extension_degree is 1");
    return make_field(prime);
  }

  Field base = Field::prime(prime);
  if (j.contains("base")) {
    base = field_from_json(j["base"], where + "/base");
    if (base.characteristic() != prime) bad(where + "/base", "characteristic differs from the extension");
  }
  const Json& mod = member(j, "modulus", where);
  if (!mod.is_array()) bad(where + "/modulus", "expected a list of coefficients");
  if (mod.size() != d + 1) {
    bad(where + "/modulus", "expected " + std::to_string(d + 1) + " coefficients for degree " + std::to_string(d));
  }
  std::vector<Code> coeffs;
  for (std::size_t i = 0; i < mod.size(); ++i) {
    coeffs.push_back(element_from_json(base, mod[i], where + "/modulus/" + std::to_string(i)));
  }
  if (coeffs.back() != 1) bad(where + "/modulus", "modulus must be monic");
  try {
    return make_extension(base, Polynomial(base, coeffs));
  } catch (const Error& e) {
    bad(where + "/modulus", e.what());
  }
}

Code element_from_json(const Field& field, const Json& j, const std::string& where) {
  if (field.is_prime_field()) {
    const auto v = as_uint(j, where);
    if (v >= field.characteristic()) bad(where, "coefficient out of range [0, " + std::to_string(field.characteristic()) + ")");
    return static_cast<Code>(v);
  }
  if (!j.is_array() || j.size() != field.degree()) {
    bad(where, "expected a list of " + std::to_string(field.degree()) + " coefficients");
  }
  const Field base = field.base();
  std::vector<Code> digits;
  for (std::size_t i = 0; i < j.size(); ++i) digits.push_back(element_from_json(base, j[i], where + "/" + std::to_string(i)));
  return field.from_coefficients(digits);
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  const Field field = field_from_json(member(j, "field", where), where + "/field");
  const auto m = as_uint(member(j, "size", where), where + "/size");
  if (m == 0 || m > 64) bad(where + "/size", "must be between 1 and 64");
  const Json& rows = member(j, "entries", where);
  if (!rows.is_array() || rows.size() != m) bad(where + "/entries", "expected " + std::to_string(m) + " rows");
  std::vector<Code> entries;
  for (std::size_t i = 0; i < m; ++i) {
    const std::string row_path = where + "/entries/" + std::to_string(i);
    if (!rows[i].is_array() || rows[i].size() != m) bad(row_path, "expected " + std::to_string(m) + " entries");
    for (std::size_t k = 0; k < m; ++k) {
      entries.push_back(element_from_json(field, rows[i][k], row_path + "/" + std::to_string(k)));
    }
  }
  return Matrix(field, m, m, std::move(entries));
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::InvalidInput, path + ": " + e.what());
  }
  return matrix_from_json(j, "");
}

}  // namespace gelfand
