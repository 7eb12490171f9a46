// reports.hpp — versioned JSON/CSV/markdown serialization of result records.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "json.hpp"
#include "qsph/qrat.hpp"
#include "qsph/spectral.hpp"

namespace qsph {

// bumped whenever a field is added, renamed or re-interpreted; cached reports
// carrying a different version string are discarded
inline constexpr const char* kReportSchemaVersion = "qsph-report/1";

// symbolic route of the index pairing, assembled by the CLI
struct SymbolicIndexReport {
  HalfInt n;
  QRat value;        // exact q^{-2|n|} [2n]
  double q = 0.0;    // evaluation point
  double value_at_q = 0.0;
};

nlohmann::ordered_json report_json(const SymbolicIndexReport& rep);
nlohmann::ordered_json report_json(const KernelIndexReport& rep);
nlohmann::ordered_json report_json(const ZetaReport& rep);
nlohmann::ordered_json report_json(const CommutatorReport& rep, double q, HalfInt lambda,
                                   const std::string& beta);
nlohmann::ordered_json report_json(const DimensionProbeReport& rep, double q);
nlohmann::ordered_json report_json(const PdcReport& rep, const std::string& beta);
nlohmann::ordered_json report_json(const ResolventReport& rep, double q,
                                   const std::string& a0);

// render a report row as "json", "csv" (header line + value line) or "md"
// (two-column table); nested arrays are inlined in compact JSON form
std::string render(const nlohmann::ordered_json& row, const std::string& format);

}  // namespace qsph
