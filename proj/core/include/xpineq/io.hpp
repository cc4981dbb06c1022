#pragma once

#include <string>

#include "xpineq/cube.hpp"
#include "xpineq/report.hpp"
#include "xpineq/torus.hpp"

namespace xpineq {

// Wire formats:
//   cube / spectrum : {"n": int, "repr": "point"|"walsh", "data": [reals in bitmask order]}
//   dense torus     : {"r": int, "n": int, "data": [reals in mixed-radix order]}
// Doubles round-trip bit-exactly (shortest-representation printing).

std::string to_json(const CubeFunction& h);
std::string to_json(const WalshSpectrum& spectrum);
std::string to_json(const TorusFunction& f);

CubeFunction cube_from_json(const std::string& text);
WalshSpectrum spectrum_from_json(const std::string& text);
TorusFunction torus_from_json(const std::string& text);

/// Report JSON with stable field names and deterministic content (wall time is
/// a process measurement and is deliberately not serialized; callers that want
/// it log it separately).
std::string report_to_json(const InequalityReport& report, int indent = 2);

/// Flattened CSV emission: one row per report, header derived from the same
/// flattening. Fields are printed with %.17g and are round-trippable.
std::string report_csv_header(const InequalityReport& report);
std::string report_csv_row(const InequalityReport& report);

std::string format_double(double v);

}  // namespace xpineq
