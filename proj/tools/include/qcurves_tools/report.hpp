#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace qcurves::tools {

using json = nlohmann::json;

enum class Status { pass, fail };

const char* to_string(Status s);

struct Item {
  std::string name;
  json expected;
  json computed;
  Status status = Status::fail;
  std::string ref;
};

struct Report {
  std::string suite;
  std::vector<Item> items;
  /// Free-form payload (rendered tables, polynomials, loci dumps).
  json data = json::object();
  /// Markdown emitted after the item table, e.g. the tangent-weight tables.
  std::string markdown_extra;
  /// Library operations exercised while building the report. Not serialized.
  std::set<std::string> ops;

  Status status() const;
};

/// {suite, items: [{name, expected, computed, status, ref}], status, data}
json to_json(const Report& r);
/// Several reports: {"status", "suites": [...]}.
json to_json(const std::vector<Report>& reports);

std::string to_markdown(const Report& r);
std::string to_markdown(const std::vector<Report>& reports);

Status overall(const std::vector<Report>& reports);

}  // namespace qcurves::tools
