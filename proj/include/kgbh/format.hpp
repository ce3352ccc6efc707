#pragma once

#include <string>

namespace kgbh {

// %.17g, the round-trip format used for all numeric output.
std::string fmt17(double x);

}  // namespace kgbh
