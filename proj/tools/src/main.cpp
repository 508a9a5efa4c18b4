#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qcurves_tools/report.hpp"
#include "qcurves_tools/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace qcurves::tools;

  CLI::App app{"Exact verification of torus-fixed rational curves on the quadric threefold"};
  std::string command;
  std::string format = "json";
  std::string out_path;
  std::string expected_path;
  bool fail_fast = false;

  std::vector<std::string> commands = suite_names();
  commands.push_back("all");
  app.add_option("command", command, "Suite to run, or all")->required()->check(CLI::IsMember(commands));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--out", out_path, "Write the report here instead of standard output");
  app.add_option("--expected", expected_path, "Expected-value fixture overriding the built-in one");
  app.add_flag("--fail-fast", fail_fast, "Stop after the first failing suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::optional<Fixture> fixture;
  try {
    fixture = expected_path.empty() ? Fixture::embedded() : Fixture::from_file(expected_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "qcurves: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto reports = run(command, *fixture, fail_fast);
  std::string text;
  if (format == "md") {
    text = reports.size() == 1 ? to_markdown(reports.front()) : to_markdown(reports);
  } else {
    text = (reports.size() == 1 ? to_json(reports.front()) : to_json(reports)).dump(2) + "\n";
  }

  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "qcurves: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << text;
  }
  return overall(reports) == Status::pass ? kExitPass : kExitFail;
}
