// Acceptance suite: runs every verification suite and prints one line per
// criterion.  Exit code 0 only when every criterion passes.

#include <cstdio>
#include <string>

#include "scx/suites.hpp"

int main() {
  int criterion = 0;
  bool all_ok = true;
  for (const auto& name : scx::suite_names()) {
    ++criterion;
    scx::SuiteReport report;
    bool ok = false;
    std::string note;
    try {
      report = scx::run_suite(name, 0);
      ok = report.ok();
      int passed = 0;
      for (const auto& c : report.checks)
        if (c.status != "fail") ++passed;
      note = std::to_string(passed) + "/" +
             std::to_string(report.checks.size()) + " checks";
      if (!ok)
        for (const auto& c : report.checks)
          if (c.status == "fail") {
            note += "; first failure: " + c.name;
            if (!c.witness.empty()) note += " (" + c.witness + ")";
            break;
          }
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    all_ok &= ok;
    std::printf("%s criterion-%d %s [%s]\n", ok ? "PASS" : "FAIL", criterion,
                name.c_str(), note.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
