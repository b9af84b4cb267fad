#pragma once

#include "lambdag/chevalley.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace lambdag {

/// Text form of the bracket table:
///   lie-sc v1 <type> <rank>
///   i j : k1=p1/q1, k2=p2/q2, ...
/// one line per nonzero [x_i, x_j] with i < j, terms by increasing k.
std::string serialize_brackets(const LieAlgebra& L);

/// Inverse of serialize_brackets; throws std::runtime_error on malformed
/// input or a header that does not match rs.
LieAlgebra parse_brackets(const RootSystem& rs, const std::string& text);

/// $LIE_SC_CACHE_DIR, else $XDG_CACHE_HOME/lambdag, else ~/.cache/lambdag.
std::filesystem::path default_cache_dir();

std::filesystem::path cache_file(const std::filesystem::path& dir, char type_label, int rank);

/// Write via a temporary file in the same directory and rename into place.
void write_cache_atomically(const std::filesystem::path& file, const std::string& contents);

/// Reads the cached table when present and well formed, otherwise builds the
/// algebra and tries to store it. Cache I/O failures never abort.
LieAlgebra load_or_build_algebra(char type_label, int rank,
                                 std::optional<std::filesystem::path> dir = std::nullopt);

} // namespace lambdag
