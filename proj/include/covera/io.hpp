#pragma once

#include <string>

#include "covera/design.hpp"

namespace covera {

// Text format: first content line "v k lambda", then one block per line as
// k space-separated 1-based points. '#' starts a comment line; blank lines
// are ignored. Serialisation is canonical (sorted blocks, single spaces)
// and parse(serialize(d)) == d exactly.
Design parse_design(const std::string& text);
std::string serialize_design(const Design& d);

Design read_design_file(const std::string& path);
void write_design_file(const Design& d, const std::string& path);

}  // namespace covera
