#include "dsm/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dsm {

Json matrix_to_json(const ExactMatrix& m) {
  Json j;
  j["n"] = m.dim();
  j["d"] = m.radicand();
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.dim(); ++k) row.push_back(m.at(i, k).to_string());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

ExactMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON must carry \"n\" and \"entries\"");
  const int n = j.at("n").get<int>();
  ExactMatrix m(n);
  const auto& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("matrix JSON entries must hold n rows");
  for (int i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix JSON rows must all have length n");
    for (int k = 0; k < n; ++k) m.at(i, k) = parse_scalar(row.at(k).get<std::string>());
  }
  return m;
}

Json charpoly_to_json(const CharPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(c.to_string());
  return coeffs;
}

CharPoly charpoly_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("charpoly JSON must be a coefficient array");
  CharPoly p;
  for (const auto& c : j) p.coeffs.push_back(parse_scalar(c.get<std::string>()));
  return p;
}

ExactMatrix matrix_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  Json j;
  in >> j;
  return matrix_from_json(j);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

ExactMatrix matrix_from_arg(const std::string& arg) {
  std::string trimmed = arg;
  const auto first = trimmed.find_first_not_of(" \t\n");
  if (first != std::string::npos && trimmed[first] == '{')
    return matrix_from_json(Json::parse(trimmed));
  return matrix_from_file(arg);
}

}  // namespace dsm
