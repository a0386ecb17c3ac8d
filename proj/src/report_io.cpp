#include "hankelcat/report_io.hpp"

#include <sstream>
#include <stdexcept>

namespace hankelcat {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string compact(const Json& j) { return j.dump(); }

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "md" || text == "markdown") return Format::Markdown;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format: " + text);
}

Json report_to_json(const ConjectureReport& report) {
  Json j;
  j["id"] = report.id;
  j["claim"] = report.claim;
  j["params"] = report.params;
  j["status"] = to_string(report.status());
  j["verified"] = Json::array();
  for (const auto& v : report.verified) j["verified"].push_back({{"point", v.point}, {"range", v.range}});
  j["counterexamples"] = Json::array();
  for (const auto& c : report.counterexamples) {
    j["counterexamples"].push_back({{"point", c.point},
                                    {"index", c.index},
                                    {"expected", c.expected},
                                    {"actual", c.actual},
                                    {"claim", c.claim}});
  }
  j["inconclusive"] = Json::array();
  for (const auto& i : report.inconclusive) {
    j["inconclusive"].push_back({{"point", i.point}, {"reason", i.reason}});
  }
  j["artifacts"] = report.artifacts;
  j["notes"] = report.notes;
  return j;
}

std::string render_reports(const std::vector<ConjectureReport>& reports, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      out << "id,status,kind,point,index,detail\n";
      for (const auto& r : reports) {
        const std::string id = csv_cell(r.id), status = to_string(r.status());
        for (const auto& v : r.verified) {
          out << id << "," << status << ",verified," << csv_cell(compact(v.point)) << ",,"
              << csv_cell(v.range) << "\n";
        }
        for (const auto& c : r.counterexamples) {
          out << id << "," << status << ",counterexample," << csv_cell(compact(c.point)) << ","
              << c.index << ","
              << csv_cell(c.claim + ": expected " + c.expected + ", got " + c.actual) << "\n";
        }
        for (const auto& i : r.inconclusive) {
          out << id << "," << status << ",inconclusive," << csv_cell(compact(i.point)) << ",,"
              << csv_cell(i.reason) << "\n";
        }
        for (const auto& n : r.notes) {
          out << id << "," << status << ",note,,," << csv_cell(n) << "\n";
        }
      }
      break;
    }
    case Format::Markdown: {
      for (const auto& r : reports) {
        out << "## " << r.id << ": " << to_string(r.status()) << "\n\n";
        if (!r.claim.empty()) out << "Claim: " << r.claim << "\n\n";
        out << "Parameters: `" << compact(r.params) << "`\n\n";
        if (!r.counterexamples.empty()) {
          out << "| point | index | expected | actual | claim |\n|---|---|---|---|---|\n";
          for (const auto& c : r.counterexamples) {
            out << "| `" << md_cell(compact(c.point)) << "` | " << c.index << " | "
                << md_cell(c.expected) << " | " << md_cell(c.actual) << " | " << md_cell(c.claim)
                << " |\n";
          }
          out << "\n";
        }
        if (!r.inconclusive.empty()) {
          out << "Inconclusive:\n\n";
          for (const auto& i : r.inconclusive) out << "- `" << compact(i.point) << "`: " << i.reason << "\n";
          out << "\n";
        }
        if (!r.verified.empty()) {
          out << "Verified:\n\n";
          for (const auto& v : r.verified) out << "- `" << compact(v.point) << "`: " << v.range << "\n";
          out << "\n";
        }
        if (!r.notes.empty()) {
          out << "Notes:\n\n";
          for (const auto& n : r.notes) out << "- " << n << "\n";
          out << "\n";
        }
      }
      break;
    }
  }
  return out.str();
}

std::string render_table(const TextTable& table, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& row : table.rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < table.header.size(); ++i) {
          obj[table.header[i]] = i < row.size() ? row[i] : "";
        }
        arr.push_back(obj);
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
        out << "\n";
      };
      line(table.header);
      for (const auto& row : table.rows) line(row);
      break;
    }
    case Format::Markdown: {
      auto line = [&](const std::vector<std::string>& cells) {
        out << "|";
        for (const auto& c : cells) out << " " << md_cell(c) << " |";
        out << "\n";
      };
      line(table.header);
      out << "|";
      for (std::size_t i = 0; i < table.header.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& row : table.rows) line(row);
      break;
    }
  }
  return out.str();
}

}  // namespace hankelcat
