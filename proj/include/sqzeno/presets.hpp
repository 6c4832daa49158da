#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sqzeno::presets {

// Built-in scenario configs, byte-identical to the files under presets/.
// Names: fig1 .. fig6, table1.
std::vector<std::string> names();

// Throws std::out_of_range for an unknown name.
std::string_view get(const std::string& name);

} // namespace sqzeno::presets
