#pragma once

// Certificate JSON, reports, the table in CSV/JSON, and per-copy DOT export.

#include "lpack/bounds.hpp"
#include "lpack/model.hpp"
#include "lpack/verifier.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lpack {

using Json = nlohmann::ordered_json;

/// {"n", "k", "directed", "base", "labels", "perms"} in that order.
Json certificate_json(const LabeledPacking& packing);
/// Compact single-line certificate followed by a newline; stable byte for byte.
std::string write_certificate(const LabeledPacking& packing);

/// Throws FormatError when the text is not a well-formed certificate. Values
/// that only break validity (non-bijective perms, a base that is not a
/// cycle) are accepted and left for verify() to report.
LabeledPacking read_certificate(std::string_view text);

Json report_json(const VerificationReport& report);
Json bound_report_json(const BoundReport& report);

/// Header k,x,n,p_max.
std::string table_csv(const std::vector<Table1Row>& rows);
/// {"rows": [{"k", "x", "n", "p_max", "witness"}, ...]}.
Json table_json(const std::vector<Table1Row>& rows);

/// One graph per copy, named copy1..copyk; every vertex carries its label.
std::string to_dot(const LabeledPacking& packing);

} // namespace lpack
