#pragma once

#include <string>

#include "cycontext/system.hpp"

namespace cycontext {

// System file format: {"rank": n, "bunches": [{"p00": "1/8", "p01": "3/8",
// "p10": "3/8", "p11": "1/8"}, ...]} with rationals as "a/b" strings or
// exact decimal strings. Parse failures throw std::invalid_argument naming
// the offending field.
CyclicSystem parse_system_file(const std::string& text);

std::string serialize_system_file(const CyclicSystem& system);

}  // namespace cycontext
