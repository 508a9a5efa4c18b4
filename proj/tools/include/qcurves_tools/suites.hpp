#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "qcurves_tools/report.hpp"

namespace qcurves::tools {

/// Expected values keyed by suite and check name:
/// {"version": 1, "suites": {"<suite>": {"<check>": {"expected": ..., "ref": "..."}}}}
class Fixture {
 public:
  /// The copy of tools/data/expected.json compiled into the binary.
  static Fixture embedded();
  /// Throws std::invalid_argument on unreadable or malformed input.
  static Fixture from_file(const std::filesystem::path& path);
  static Fixture parse(const std::string& text);

  /// nullptr when the check is not listed.
  const json* entry(const std::string& suite, const std::string& check) const;
  std::vector<std::string> checks(const std::string& suite) const;

 private:
  explicit Fixture(json root);
  json root_;
};

/// lines, conics, cubics, tables, poincare, ring, example, loci.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Builds one report; checks that throw are recorded as failures.
Report run_suite(const std::string& name, const Fixture& fixture);

/// `command` is a suite name or "all". With fail_fast, "all" runs suites in
/// order and stops after the first failing one; otherwise suites run
/// concurrently and are returned in suite_names() order.
std::vector<Report> run(const std::string& command, const Fixture& fixture, bool fail_fast = false);

/// Tags ("module.operation") of every library operation the suites are
/// required to exercise.
const std::set<std::string>& required_operations();

}  // namespace qcurves::tools
