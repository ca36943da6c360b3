#ifndef DSM_IO_HPP_
#define DSM_IO_HPP_

#include "dsm/charpoly.hpp"
#include "dsm/matrix.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace dsm {

using Json = nlohmann::json;

/// {"n": int, "d": int, "entries": [["p/q" | "p/q+r/s*sqrt(d)", ...]]}.
/// Exact round-trip: matrix_from_json(matrix_to_json(m)) == m.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

/// Coefficient strings, constant term first.
Json charpoly_to_json(const CharPoly& p);
CharPoly charpoly_from_json(const Json& j);

ExactMatrix matrix_from_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Reads a matrix from a CLI argument: a path to a JSON file, or an
/// inline JSON object (detected by a leading '{').
ExactMatrix matrix_from_arg(const std::string& arg);

}  // namespace dsm

#endif  // DSM_IO_HPP_
