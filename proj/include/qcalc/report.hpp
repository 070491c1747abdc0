#pragma once

// Full-pipeline summary of one document, as ordered JSON.

#include <string>
#include <vector>

#include <json.hpp>

#include "qcalc/dsl.hpp"

namespace qcalc {

using Json = nlohmann::ordered_json;

struct GeometryReport {
  /// Keys, in order: name, jacobi, qc_valid, bi1, S, T0, torsion_endos,
  /// torsion_nonzero, dOmega_zero, vertical_integrable, R_samples,
  /// wqc_samples, conformally_flat, audit, fingerprint.
  Json json;
  /// Names of failed non-diagnostic audit entries.
  std::vector<std::string> failed_checks;
  bool passed() const { return failed_checks.empty(); }
};

/// Sample tuples shared by R_samples and wqc_samples, as horizontal positions.
inline constexpr std::array<std::array<int, 4>, 4> kSamplePositions{{
    {0, 1, 0, 1}, {0, 2, 0, 2}, {0, 3, 0, 3}, {1, 2, 1, 2}}};

/// Requires a non-parametric document with a qc block.
GeometryReport build_report(const AlgebraDocument& doc);

std::string report_text(const GeometryReport& report);

}  // namespace qcalc
