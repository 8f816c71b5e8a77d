#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "bezout/polynomial.hpp"

namespace bezout {

// Wire format shared by every CLI command: {"coeffs": [[re, im], ...]}, index = power.
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(Complex z);

/// Accepts the canonical object form; also a bare coefficient array, and
/// bare real numbers in place of [re, im] pairs.
Polynomial polynomial_from_json(const nlohmann::json& j);
Complex complex_from_json(const nlohmann::json& j);

/// Reads a polynomial from a file, or parses `source` directly when it
/// starts with '{' or '['.
Polynomial load_polynomial(const std::string& source);
void save_json(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace bezout
