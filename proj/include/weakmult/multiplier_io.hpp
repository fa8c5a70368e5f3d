#pragma once

#include <string>
#include <string_view>

#include "weakmult/multiplier.hpp"

namespace weakmult {

/// Frequency grid used for summand norms when a spec file names none:
/// d = 1: extent 64, 4096 points; d = 2: extent 32, 512 points. Their duals
/// (spatial spacing 1/64 and 1/32) are the default kernel grids.
UniformGrid default_reference_grid(int dimension);

/// Parses a multiplier spec (JSON text). Schema:
///
///   {
///     "dimension": 1 | 2 | 3,
///     "q": 1.2,
///     "reference_grid": {"extent": 32, "points": 512},   // optional
///     "summands": [ {"f": <factor>, "g": <factor>}, ... ]
///   }
///
/// A <factor> is a descriptor, or {"type": "spectral", "of": <descriptor>} for
/// the forward transform of a spatial descriptor. Descriptors:
///
///   {"type": "gaussian", "a": 2.0, "c": 1.0, "center": [0.1, 0.0]}
///   {"type": "truncated_power"}
///   {"type": "indicator", "lo": [0], "hi": [1]}
///   {"type": "product", "factors": [<descriptor>, ...]}
///   {"type": "sum", "terms": [{"weight": 0.5, "f": <descriptor>}, ...]}
///
/// In dimension 3 no grid exists and every factor must be a single Gaussian.
/// Throws std::invalid_argument on malformed input.
ClassAMultiplier parse_multiplier_spec(std::string_view text);

/// Reads and parses a spec file; std::runtime_error if it cannot be read.
ClassAMultiplier load_multiplier_spec(const std::string& path);

}  // namespace weakmult
