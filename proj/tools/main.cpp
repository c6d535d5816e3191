// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  Talks to the library exclusively through the C
// interface; everything here is argument plumbing and stream handling.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lathom/lathom.h"

namespace {

int fail_with(lathom_status status) {
  std::cerr << "error: " << lathom_last_error() << "\n";
  return static_cast<int>(status);
}

// Surfaces the first failing check on stderr so scripts get a one-line
// diagnosis without parsing the report.
void report_first_failure(const std::string& report, bool json) {
  if (json) {
    auto doc = nlohmann::json::parse(report, nullptr, false);
    if (doc.is_discarded()) return;
    for (const auto& c : doc.value("checks", nlohmann::json::array()))
      if (c.value("status", "") == "fail") {
        std::cerr << "first failing check: " << c.value("name", "?") << ": "
                  << c.value("witness", "") << "\n";
        return;
      }
    return;
  }
  std::istringstream is(report);
  std::string line;
  while (std::getline(is, line))
    if (line.rfind("  [fail] ", 0) == 0) {
      std::cerr << "first failing check: " << line.substr(9) << "\n";
      return;
    }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological invariants of incidence algebras of finite posets"};
  app.require_subcommand(1);

  std::string field = "q", output = "text";
  bool timings = false;
  app.add_option("--field", field, "coefficient field: q or fp:<prime>")
      ->capture_default_str();
  app.add_option("--output", output, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--timings", timings, "include per-check milliseconds in JSON reports");

  std::string input, selector;
  long budget = 5000;
  int nmax = 0;

  auto* analyze = app.add_subcommand("analyze", "structure and homological profile");
  analyze->add_option("input", input, "poset JSON file")->required();

  auto* resolve = app.add_subcommand("resolve", "resolution and coresolution of one module");
  resolve->add_option("input", input, "poset JSON file")->required();
  resolve->add_option("--module", selector, "module selector kind:label")->required();

  auto* verify = app.add_subcommand("verify", "run the verification checklist");
  verify->add_option("input", input, "poset JSON file")->required();
  verify->add_option("--budget", budget, "linear-extension enumeration cap")
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "verify every poset of a fixed size");
  sweep->add_option("--nmax", nmax, "poset size to enumerate (1..6)")->required();
  sweep->add_option("--budget", budget, "linear-extension enumeration cap")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  lathom_poset* poset = nullptr;
  if (!sweep->parsed()) {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "error: cannot read " << input << "\n";
      return static_cast<int>(LATHOM_PARSE_ERROR);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const lathom_status st = lathom_poset_parse_json(buffer.str().c_str(), &poset);
    if (st != LATHOM_OK) return fail_with(st);
  }

  char* report = nullptr;
  int all_passed = 1;
  lathom_status st = LATHOM_OK;
  if (analyze->parsed())
    st = lathom_analyze(poset, field.c_str(), output.c_str(), &report);
  else if (resolve->parsed())
    st = lathom_resolve(poset, field.c_str(), selector.c_str(), output.c_str(), &report);
  else if (verify->parsed())
    st = lathom_verify(poset, field.c_str(), budget, timings ? 1 : 0, output.c_str(),
                       &report, &all_passed);
  else
    st = lathom_sweep(nmax, field.c_str(), budget, timings ? 1 : 0, output.c_str(), &report,
                      &all_passed);

  int code;
  if (st == LATHOM_OK || st == LATHOM_CHECK_FAILED) {
    std::cout << report;
    if (st == LATHOM_CHECK_FAILED) report_first_failure(report, output == "json");
    code = static_cast<int>(st);
  } else {
    code = fail_with(st);
  }

  lathom_string_free(report);
  lathom_poset_free(poset);
  return code;
}
