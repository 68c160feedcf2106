#ifndef MOPARETO_IO_HPP
#define MOPARETO_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "mopareto/model.hpp"

namespace mopareto {

// Instance file:
//   {"p": 2, "solutions": [{"id": "x1", "f": ["1", "3/2"]}, ...]}
// Approximation-set file:
//   {"relation": {"kind": "quasi-k", "eps": "1/2", "k": 2},
//    "members": ["x1", ...],
//    "certificate": [{"covered": "x2", "by": "x1", "exact_indices": [1]}, ...]}
//
// Rationals are strings in the textual syntax of parse_rational; bare JSON
// integers are also accepted on input. Output is deterministic: fixed key
// order, two-space indentation, trailing newline.

/// Throws ParseError (syntax, types, rationals) or InstanceError (invariants).
Instance load_instance(std::string_view json_text);
std::string save_instance(const Instance& instance);

ApproximationSet load_set(std::string_view json_text);
std::string save_set(const ApproximationSet& set);

std::string read_text_file(const std::filesystem::path& path);
/// Writes through a sibling temporary file and renames it into place.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace mopareto

#endif  // MOPARETO_IO_HPP
