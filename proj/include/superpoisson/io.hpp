#ifndef SUPERPOISSON_IO_HPP
#define SUPERPOISSON_IO_HPP

#include <string>
#include <variant>

#include "superpoisson/presentation.hpp"

namespace poisson::io {

using Parsed = std::variant<SuperAlgebra<Scalar>, PoissonPair>;

/// Parses an algebra file (key "products") or a pair file (keys "dot" and
/// "bracket"). Coefficients are rational strings "p" or "p/q"; JSON
/// numbers are rejected to keep the format exact. Errors carry the JSON
/// path of the offending field.
Parsed parse_algebra_file(const std::string& text);

Parsed load_file(const std::string& path);

std::string serialize(const SuperAlgebra<Scalar>& A);
std::string serialize(const PoissonPair& pair);

} // namespace poisson::io

#endif
