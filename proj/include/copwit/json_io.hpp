#pragma once
/// @file json_io.hpp
/// @brief JSON (de)serialization for the repo-wide matrix format.
///
/// Matrix format: {"dim": n, "re": [[..]], "im": [[..]]} with "im" omitted for
/// real matrices.  Entries may be JSON numbers, exact decimal strings, or
/// rational strings "a/b"; strings are converted to double at parse time.

#include <string>

#include "copwit/types.hpp"
#include "json.hpp"

namespace copwit::json_io {

using nlohmann::json;

/// Parse one matrix entry: a number, a decimal string, or a rational "a/b".
/// Throws std::invalid_argument on malformed input.
double parse_entry(const json& v);

/// Parse the repo matrix format into a complex matrix.  Throws
/// std::invalid_argument on malformed input (shape mismatch, bad entries).
CplxMat parse_matrix(const json& j);

/// Parse a matrix that must be real symmetric; Hermitian/symmetry is
/// validated within 1e-12 relative to the largest entry.
RealMat parse_real_symmetric(const json& j);

/// Serialize a complex matrix; "im" is omitted when all imaginary parts
/// vanish exactly.
json matrix_to_json(const CplxMat& m);
json matrix_to_json(const RealMat& m);

/// Read and parse a whole JSON file.  Throws std::invalid_argument with a
/// path-bearing message on I/O or parse failure.
json load_json_file(const std::string& path);

}  // namespace copwit::json_io
