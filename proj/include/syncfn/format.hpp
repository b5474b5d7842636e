#pragma once

#include <string>

namespace syncfn {

// Shortest decimal representation that round-trips the double.
std::string format_shortest(double v);

}  // namespace syncfn
