#include "bezout/json_io.hpp"

#include <fstream>
#include <sstream>

#include "bezout/error.hpp"

namespace bezout {

nlohmann::json to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json to_json(const Polynomial& p) {
  auto coeffs = nlohmann::json::array();
  for (Complex c : p.dense()) coeffs.push_back(to_json(c));
  return {{"coeffs", std::move(coeffs)}};
}

Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorKind::InvalidArgument, "expected a number or [re, im] pair, got " + j.dump());
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  const nlohmann::json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw Error(ErrorKind::InvalidArgument, "polynomial object lacks \"coeffs\"");
    arr = &j.at("coeffs");
  }
  if (!arr->is_array() || arr->empty())
    throw Error(ErrorKind::InvalidArgument, "polynomial coefficients must be a non-empty array");
  std::vector<Complex> c;
  c.reserve(arr->size());
  for (const auto& e : *arr) c.push_back(complex_from_json(e));
  return Polynomial(std::move(c));
}

Polynomial load_polynomial(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    try {
      return polynomial_from_json(nlohmann::json::parse(source));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("malformed polynomial JSON: ") + e.what());
    }
  }
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + source);
  try {
    return polynomial_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, source + ": " + e.what());
  }
}

void save_json(const nlohmann::json& j, const std::filesystem::path& path) {
  std::error_code ec;  // a failure here surfaces as an Io error when the stream opens
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace bezout
