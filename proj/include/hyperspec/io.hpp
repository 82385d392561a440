#pragma once

#include <string>
#include <string_view>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec::io {

enum class Format { Text, Json };

/// Text ".hg" format: '#' comment lines, a header line "n m", then m lines of
/// space-separated vertex ids. Blank lines are ignored.
Hypergraph parse_hg(std::string_view text);
std::string to_hg(const Hypergraph& h);

/// JSON object {"vertices": n, "edges": [[...], ...]}.
Hypergraph parse_json(std::string_view text);
std::string to_json(const Hypergraph& h);

/// Chooses JSON when the first non-blank character is '{', text otherwise.
Hypergraph parse(std::string_view text);
Format detect_format(std::string_view text);

std::string serialize(const Hypergraph& h, Format format);

Hypergraph read_file(const std::string& path);

/// Writes through a sibling temporary file and renames it into place, so a
/// failed run never leaves a partial file behind.
void write_file_atomic(const std::string& path, std::string_view contents);

/// Shortest round-trip decimal form (at most 17 significant digits).
/// Non-finite values print as "nan", "inf" or "-inf".
std::string format_double(double x);

}  // namespace hyperspec::io
