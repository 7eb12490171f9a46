// reports.cpp — serialization of result records to JSON, CSV and markdown.
// SPDX-License-Identifier: MIT
#include "qsph/reports.hpp"

#include <sstream>
#include <stdexcept>

namespace qsph {
namespace {

nlohmann::ordered_json base(const char* job) {
  nlohmann::ordered_json row;
  row["schema"] = kReportSchemaVersion;
  row["job"] = job;
  return row;
}

}  // namespace

nlohmann::ordered_json report_json(const SymbolicIndexReport& rep) {
  nlohmann::ordered_json row = base("index-symbolic");
  row["n"] = rep.n.str();
  row["q"] = rep.q;
  row["value_exact"] = rep.value.str();
  row["value"] = rep.value_at_q;
  return row;
}

nlohmann::ordered_json report_json(const KernelIndexReport& rep) {
  nlohmann::ordered_json row = base("index-kernel");
  row["n"] = rep.n.str();
  row["q"] = rep.q;
  row["lambda_cutoff"] = rep.lambda.str();
  row["value"] = rep.value;
  row["expected"] = rep.expected;
  row["abs_err"] = rep.abs_err;
  row["svd_gap"] = rep.svd_gap;
  row["n_plus_weight"] = rep.n_plus_weight;
  row["n_minus_weight"] = rep.n_minus_weight;
  row["n_plus_count"] = rep.n_plus_count;
  row["n_minus_count"] = rep.n_minus_count;
  row["rejected_edge_vectors"] = rep.rejected_edge_vectors;
  return row;
}

nlohmann::ordered_json report_json(const ZetaReport& rep) {
  nlohmann::ordered_json row = base("zeta");
  row["q"] = rep.q;
  row["value"] = rep.residue;
  row["expected"] = rep.expected;
  row["abs_err"] = rep.abs_err;
  row["residue_plus"] = rep.residue_plus;
  row["residue_minus"] = rep.residue_minus;
  row["regular_c0"] = rep.c0;
  row["regular_c1"] = rep.c1;
  row["max_terms"] = rep.max_terms;
  row["sample_r"] = rep.sample_r;
  row["sample_plus"] = rep.sample_plus;
  row["sample_minus"] = rep.sample_minus;
  return row;
}

nlohmann::ordered_json report_json(const CommutatorReport& rep, double q, HalfInt lambda,
                                   const std::string& beta) {
  nlohmann::ordered_json row = base("commutator-check");
  row["beta"] = beta;
  row["q"] = q;
  row["lambda_cutoff"] = lambda.str();
  row["twist"] = rep.twist == TwistSign::kPlus ? "plus" : "minus";
  row["max_residual"] = rep.max_residual;
  row["max_interior_residual"] = rep.max_interior_residual;
  row["interior_dim"] = rep.interior_dim;
  return row;
}

nlohmann::ordered_json report_json(const DimensionProbeReport& rep, double q) {
  nlohmann::ordered_json row = base("dimension-probe");
  row["q"] = q;
  row["s_exponent"] = rep.s_exponent;
  row["converged"] = rep.converged;
  row["value"] = rep.value;
  row["tail_bound"] = rep.tail_bound;
  row["levels_used"] = rep.levels_used;
  return row;
}

nlohmann::ordered_json report_json(const PdcReport& rep, const std::string& beta) {
  nlohmann::ordered_json row = base("pdc-check");
  row["beta"] = beta;
  row["q"] = rep.q;
  row["lambda_cutoff"] = rep.lambda.str();
  row["pass"] = rep.pass;
  row["norm_at_zero"] = rep.norm_at_zero;
  row["fit_a"] = rep.fit_a;
  row["fit_b"] = rep.fit_b;
  row["max_fit_excess"] = rep.max_fit_residual;
  row["im_z"] = rep.im_z;
  row["norms"] = rep.norms;
  return row;
}

nlohmann::ordered_json report_json(const ResolventReport& rep, double q,
                                   const std::string& a0) {
  nlohmann::ordered_json row = base("resolvent-phi0");
  row["a0"] = a0;
  row["q"] = q;
  row["r"] = rep.r;
  row["route_closed"] = rep.route_closed;
  row["route_integral"] = rep.route_integral;
  row["abs_err"] = rep.abs_err;
  return row;
}

std::string render(const nlohmann::ordered_json& row, const std::string& format) {
  if (format == "json") return row.dump(2) + "\n";
  if (format == "csv") {
    std::ostringstream head, vals;
    bool first = true;
    for (const auto& [key, value] : row.items()) {
      if (!first) {
        head << ",";
        vals << ",";
      }
      first = false;
      head << key;
      if (value.is_string()) {
        vals << '"' << value.get<std::string>() << '"';
      } else if (value.is_structured()) {
        std::string flat = value.dump();
        vals << '"' << flat << '"';
      } else {
        vals << value.dump();
      }
    }
    return head.str() + "\n" + vals.str() + "\n";
  }
  if (format == "md") {
    std::ostringstream out;
    out << "| field | value |\n|---|---|\n";
    for (const auto& [key, value] : row.items()) {
      out << "| " << key << " | "
          << (value.is_string() ? value.get<std::string>() : value.dump()) << " |\n";
    }
    return out.str();
  }
  throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace qsph
