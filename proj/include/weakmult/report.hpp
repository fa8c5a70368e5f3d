#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "weakmult/chain.hpp"
#include "weakmult/multiplier.hpp"
#include "weakmult/restriction.hpp"
#include "weakmult/sweeps.hpp"

namespace weakmult {

/// Resolved run configuration written at the top of every output file.
struct RunHeader {
  std::string command;
  /// Compact JSON object with every flag resolved.
  std::string config_json;
  std::uint64_t seed = 0;
};

std::string tool_version();

/// "# tool: ...", "# command: ...", "# config: {...}", "# seed: ..." lines.
void write_csv_header(std::ostream& out, const RunHeader& header);

/// {"header": {...}} followed by the members of the JSON object `fields`.
std::string summary_json(const RunHeader& header, const std::string& fields);

/// n,value,value_refined,rel_gap rows.
void write_sweep_csv(std::ostream& out, const RunHeader& header, const SweepReport& report);
/// {header, r, slope, intercept, goodness, claimed_slope, envelope_slope, ...}.
std::string sweep_summary_json(const RunHeader& header, const SweepReport& report);

void write_weak11_csv(std::ostream& out, const RunHeader& header, const std::vector<Weak11Report>& reports);
std::string weak11_summary_json(const RunHeader& header, const std::vector<Weak11Report>& reports);

/// {header, restriction_constant, steps: [{step, name, lhs, rhs, constant_used, pass}], ...}.
std::string chain_report_json(const RunHeader& header, const ChainReport& report);

void write_restriction_csv(std::ostream& out, const RunHeader& header, const std::vector<RestrictionRow>& rows);

void write_linfty_csv(std::ostream& out, const RunHeader& header, const std::vector<LinftyProbeRow>& rows);

}  // namespace weakmult
