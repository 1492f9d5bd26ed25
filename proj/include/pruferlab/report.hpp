#pragma once

/**
 * @file report.hpp
 * @brief Serialization of PropertyReports: versioned JSON, human-readable
 * text, and flattened CSV rows for catalogs.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "pruferlab/deciders.hpp"

namespace pruferlab {

inline constexpr int report_schema_version = 1;

/// {"schema": 1, "spec", "order", "is_local", "local_factors", "flags": {...},
/// "witnesses": {...}, "certificates": {...}, "oracles", "notes", "timings_ms"}.
/// wdim_infinite_certified is null when neither proven nor refuted.
nlohmann::ordered_json to_json(const PropertyReport& r, bool with_timings = true);

std::string render_text(const PropertyReport& r);

std::vector<std::string> csv_header();
std::vector<std::string> csv_row(const PropertyReport& r);
/// RFC 4180 quoting when a field contains a comma, quote or newline.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace pruferlab
