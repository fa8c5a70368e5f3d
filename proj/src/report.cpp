#include "weakmult/report.hpp"

#include <ostream>

#include "json.hpp"
#include "weakmult/format.hpp"

namespace weakmult {

using nlohmann::ordered_json;

namespace {

ordered_json header_json(const RunHeader& header) {
  ordered_json h;
  h["tool"] = "weakmult";
  h["version"] = tool_version();
  h["command"] = header.command;
  h["config"] = ordered_json::parse(header.config_json);
  h["seed"] = header.seed;
  return h;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string tool_version() { return WEAKMULT_VERSION; }

void write_csv_header(std::ostream& out, const RunHeader& header) {
  out << "# tool: weakmult " << tool_version() << '\n'
      << "# command: " << header.command << '\n'
      << "# config: " << header.config_json << '\n'
      << "# seed: " << header.seed << '\n';
}

std::string summary_json(const RunHeader& header, const std::string& fields) {
  ordered_json j;
  j["header"] = header_json(header);
  const ordered_json body = ordered_json::parse(fields);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return dump(j);
}

void write_sweep_csv(std::ostream& out, const RunHeader& header, const SweepReport& report) {
  write_csv_header(out, header);
  out << "n,value,value_refined,rel_gap\n";
  for (const auto& row : report.rows) {
    out << format_double(row.n) << ',' << format_double(row.value) << ','
        << format_double(row.value_refined) << ',' << format_double(row.rel_gap) << '\n';
  }
}

std::string sweep_summary_json(const RunHeader& header, const SweepReport& report) {
  ordered_json j;
  j["header"] = header_json(header);
  j["r"] = report.r;
  j["converged"] = report.converged;
  if (report.fit) {
    j["slope"] = report.fit->slope;
    j["intercept"] = report.fit->intercept;
    j["goodness"] = report.fit->goodness;
  } else {
    j["slope"] = nullptr;
    j["intercept"] = nullptr;
    j["goodness"] = nullptr;
  }
  j["claimed_slope"] = report.claimed_slope;
  j["envelope_slope"] = report.envelope_slope;
  j["rth_power_envelope_slope"] = report.rth_power_envelope_slope;
  j["verdict"] = report.verdict;
  return dump(j);
}

void write_weak11_csv(std::ostream& out, const RunHeader& header, const std::vector<Weak11Report>& reports) {
  write_csv_header(out, header);
  out << "family,index,n,ratio\n";
  for (const auto& rep : reports) {
    for (const auto& row : rep.rows) {
      out << rep.family << ',' << row.index << ',' << format_double(row.parameter) << ','
          << format_double(row.ratio) << '\n';
    }
  }
}

std::string weak11_summary_json(const RunHeader& header, const std::vector<Weak11Report>& reports) {
  ordered_json j;
  j["header"] = header_json(header);
  ordered_json fams = ordered_json::array();
  for (const auto& rep : reports) {
    ordered_json f;
    f["family"] = rep.family;
    f["members"] = rep.rows.size();
    f["max_ratio"] = rep.max_ratio;
    f["stabilization"] = rep.stabilization;
    f["tail_stabilization"] = rep.tail_stabilization;
    fams.push_back(std::move(f));
  }
  j["families"] = std::move(fams);
  return dump(j);
}

std::string chain_report_json(const RunHeader& header, const ChainReport& report) {
  ordered_json j;
  j["header"] = header_json(header);
  j["passed"] = report.passed();
  j["restriction_constant"] = report.restriction_constant;
  j["summand_restriction_ratios"] = report.summand_ratios;
  ordered_json steps = ordered_json::array();
  for (const auto& s : report.steps) {
    ordered_json e;
    e["step"] = s.step;
    e["name"] = s.name;
    e["lhs"] = s.lhs;
    e["rhs"] = s.rhs;
    e["constant_used"] = s.constant_used;
    e["pass"] = s.pass;
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  ordered_json hy = ordered_json::array();
  for (const auto& h : report.hausdorff_young) {
    ordered_json e;
    e["summand"] = h.summand;
    e["sup_norm"] = h.sup_norm;
    e["l1_norm"] = h.l1_norm;
    e["pass"] = h.pass;
    hy.push_back(std::move(e));
  }
  j["hausdorff_young"] = std::move(hy);
  return dump(j);
}

void write_restriction_csv(std::ostream& out, const RunHeader& header, const std::vector<RestrictionRow>& rows) {
  write_csv_header(out, header);
  out << "index,dilation,ratio\n";
  for (const auto& r : rows) {
    out << r.index << ',' << format_double(r.dilation) << ',' << format_double(r.ratio) << '\n';
  }
}

void write_linfty_csv(std::ostream& out, const RunHeader& header, const std::vector<LinftyProbeRow>& rows) {
  write_csv_header(out, header);
  out << "extent,points,spacing,sup,tail\n";
  for (const auto& r : rows) {
    out << format_double(r.grid.extent()) << ',' << r.grid.points_per_axis() << ','
        << format_double(r.grid.spacing()) << ',' << format_double(r.sup) << ','
        << format_double(r.tail) << '\n';
  }
}

}  // namespace weakmult
