#pragma once

#include <setbound/geometry.hpp>

#include <string>

namespace setbound {

// Command-line set syntax: "[lo,hi]x[lo,hi]x...". Safe sets additionally
// accept '*' for unconstrained dimensions, e.g. "[0.05,0.15]x[0.1,0.7]x*".
Boxd parse_box(const std::string& text);
SafeSet parse_safe(const std::string& text);

}  // namespace setbound
