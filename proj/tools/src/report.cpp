#include "qcurves_tools/report.hpp"

#include <algorithm>
#include <sstream>

namespace qcurves::tools {

const char* to_string(Status s) { return s == Status::pass ? "pass" : "fail"; }

Status Report::status() const {
  if (items.empty()) return Status::fail;
  return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.status == Status::pass; })
             ? Status::pass
             : Status::fail;
}

Status overall(const std::vector<Report>& reports) {
  if (reports.empty()) return Status::fail;
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.status() == Status::pass; })
             ? Status::pass
             : Status::fail;
}

json to_json(const Report& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    items.push_back({{"name", i.name},
                     {"expected", i.expected},
                     {"computed", i.computed},
                     {"status", to_string(i.status)},
                     {"ref", i.ref}});
  }
  return {{"suite", r.suite}, {"items", items}, {"status", to_string(r.status())}, {"data", r.data}};
}

json to_json(const std::vector<Report>& reports) {
  json suites = json::array();
  for (const auto& r : reports) suites.push_back(to_json(r));
  return {{"status", to_string(overall(reports))}, {"suites", suites}};
}

namespace {

std::string cell(const json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace

std::string to_markdown(const Report& r) {
  std::ostringstream os;
  os << "## " << r.suite << " (" << to_string(r.status()) << ")\n\n";
  os << "| check | expected | computed | status | ref |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& i : r.items) {
    os << "| " << cell(i.name) << " | `" << cell(i.expected) << "` | `" << cell(i.computed) << "` | "
       << to_string(i.status) << " | " << cell(i.ref) << " |\n";
  }
  if (!r.markdown_extra.empty()) os << "\n" << r.markdown_extra;
  return os.str();
}

std::string to_markdown(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "# qcurves verification: " << to_string(overall(reports)) << "\n\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) os << "\n";
    os << to_markdown(reports[i]);
  }
  return os.str();
}

}  // namespace qcurves::tools
