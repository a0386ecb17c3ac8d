#pragma once

// Serialization of conjecture reports and plain value tables as markdown,
// CSV or JSON.

#include <string>
#include <vector>

#include "hankelcat/conjectures.hpp"

namespace hankelcat {

enum class Format { Markdown, Csv, Json };

/// Accepts "md", "markdown", "csv", "json".
Format parse_format(const std::string& text);

/// {id, claim, params, status, verified, counterexamples, inconclusive,
/// artifacts, notes}.
Json report_to_json(const ConjectureReport& report);

std::string render_reports(const std::vector<ConjectureReport>& reports, Format format);

/// A header plus rows of cells; JSON output is an array of objects keyed by
/// the header.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_table(const TextTable& table, Format format);

}  // namespace hankelcat
