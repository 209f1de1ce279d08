// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "report.hpp"

using namespace ncres;

namespace {

int failures = 0;

void criterion(int id, const std::string& title, double limit_s,
               const std::function<report::Suite()>& run, const std::string& extra = "") {
  const auto t0 = std::chrono::steady_clock::now();
  std::string why;
  bool ok = false;
  try {
    const report::Suite s = run();
    ok = s.pass() && !s.rows.empty();
    if (const report::Row* bad = s.first_failure()) why = "failed: " + bad->name;
  } catch (const std::exception& e) {
    why = e.what();
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && limit_s > 0 && dt > limit_s) {
    ok = false;
    why = "over the " + std::to_string(limit_s) + " s limit";
  }
  if (!ok) ++failures;
  std::printf("%s %d %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), dt,
              why.empty() ? "" : "  ", why.c_str());
  if (!extra.empty()) std::printf("       %s\n", extra.c_str());
}

}  // namespace

int main() {
  criterion(1, "exterior algebra suite", 5, report::exterior_suite);
  criterion(2, "trace identity suite", 5, report::trace_suite);
  criterion(3, "half-line suite", 2, report::halfline_suite);
  criterion(4, "sphere suite", 1, report::sphere_suite);
  criterion(5, "symbol suite", 10, report::symbol_suite);

  OmegaReport omega;
  criterion(6, "case suite", 60, [&] {
    report::Suite s = report::enumeration_suite();
    omega = omega3();
    s.append(report::case_suite(omega));
    return s;
  });
  criterion(7, "integration-by-parts chain", 0, report::chain_suite);
  criterion(8, "oracle cross-check at h1 = 1", 0, [&] {
    return report::oracle_suite(omega.cases.empty() ? omega3().cases : omega.cases);
  });

  std::string values;
  criterion(9, "isotropy constant and b + c reported", 0, [&] {
    report::Suite s{"deliverable", {}};
    const auto doc = report::omega_json(omega, std::nullopt);
    s.add("omega3 reports a", doc["a"].is_string(), doc["a"].is_string() ? doc["a"].get<std::string>() : "");
    s.add("conjecture reports b + c", doc["conjecture"]["matrix"].is_array());
    values = "a = " + (doc["a"].is_string() ? doc["a"].get<std::string>() : std::string("n/a")) +
             ", b + c = " + doc["conjecture"]["matrix"].dump() +
             ", b + c isotropic constant = " +
             (doc["conjecture"]["a"].is_string() ? doc["conjecture"]["a"].get<std::string>()
                                                  : std::string("n/a"));
    return s;
  });
  if (!values.empty()) std::printf("       %s\n", values.c_str());
  return failures ? 1 : 0;
}
