#pragma once

#include <string>

namespace weakmult {

/// Fixed 17-significant-digit rendering used by every CSV writer.
std::string format_double(double value);

}  // namespace weakmult
