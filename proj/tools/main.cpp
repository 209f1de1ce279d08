#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "ncres/error.hpp"
#include "report.hpp"

using namespace ncres;

namespace {

struct Flags {
  std::string command;
  std::optional<std::string> case_id;
  bool general = false;
  bool json = false;
  std::optional<std::string> h1_text;
};

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorKind::parse, "not a rational number: " + text);
  q.canonicalize();
  return q;
}

std::vector<CaseResult> selected_cases(const Flags& f) {
  std::vector<CaseResult> out;
  if (f.case_id) {
    out.push_back(eval_case(parse_case_id(*f.case_id)));
    return out;
  }
  for (CaseId id : kAllCases) out.push_back(eval_case(id));
  return out;
}

void print_case(const CaseResult& c, const std::optional<Rational>& h1) {
  std::cout << "case " << c.index.str() << "  (" << c.terms
            << " terms)\n"
            << report::matrix_text(c.matrix, h1);
  for (const SlotValue& v : c.higher)
    std::cout << "  d^" << v.f1.str() << " f1 d^" << v.f2.str()
              << " f2: " << report::exact_text(v.value, h1) << "\n";
}

const char* yes(bool b) { return b ? "yes" : "no"; }

int finish(const report::Suite& s, const Flags& f, nlohmann::json omega,
           const std::string& human_tail) {
  if (f.json) {
    std::cout << report::document(f.command, s, std::move(omega)).dump(2) << "\n";
  } else {
    std::cout << report::text(s) << human_tail;
  }
  if (const report::Row* bad = s.first_failure()) {
    std::cerr << "identity violation: " << bad->name << "\n";
    return 1;
  }
  return 0;
}

int run(const Flags& f) {
  std::optional<Rational> h1;
  if (f.h1_text) h1 = parse_rational(*f.h1_text);

  if (f.command == "identities") return finish(report::identities(), f, nullptr, "");

  if (f.command == "enumerate") {
    const EnumerationReport e = enumerate_general();
    std::string tail;
    const nlohmann::json j = report::enumeration_json(e, f.general);
    for (const auto& t : j["tuples"])
      tail += t["case"].get<std::string>() + "  r=" + std::to_string(t["r"].get<int>()) +
              " l=" + std::to_string(t["l"].get<int>()) + " k=" + std::to_string(t["k"].get<int>()) +
              " j=" + std::to_string(t["j"].get<int>()) +
              " |alpha|=" + std::to_string(t["alpha"].get<int>()) +
              " beta''=" + std::to_string(t["beta_normal"].get<int>()) +
              " delta''=" + std::to_string(t["delta_normal"].get<int>()) + "\n";
    if (f.general) {
      for (const auto& c : e.counts)
        tail += "count " + c.convention + " = " + std::to_string(c.count) + "\n";
      tail += "reference count " + std::to_string(e.reference_count) + " matches: " +
              (e.matching_convention.empty() ? "none" : e.matching_convention) + "\n";
    }
    return finish(report::enumeration_suite(), f, j, tail);
  }

  if (f.command == "cases") {
    const auto cases = selected_cases(f);
    if (!f.json)
      for (const CaseResult& c : cases) print_case(c, h1);
    return finish(report::case_suite(cases), f, {{"cases", report::cases_json(cases, h1)}}, "");
  }

  if (f.command == "omega3") {
    const OmegaReport r = omega3();
    std::string tail;
    if (!f.json) {
      for (const CaseResult& c : r.cases) print_case(c, h1);
      std::cout << "total\n" << report::matrix_text(r.total, h1);
      tail = std::string("h1-linear: ") + yes(r.h1_linear) + "\nisotropic: " + yes(r.isotropic) +
             "\nsymmetric: " + yes(r.symmetric) +
             "\nsecond-derivative slots vanish: " + yes(r.higher_slots_vanish) +
             "\ntotal is zero: " + yes(r.total_zero) + "\n";
      if (r.isotropic) tail += "a (total = a h1 I): " + to_string(r.a) + "\n";
    }
    return finish(report::case_suite(r), f, report::omega_json(r, h1), tail);
  }

  if (f.command == "conjecture") {
    std::vector<CaseResult> bc{eval_case(CaseId::b), eval_case(CaseId::c)};
    const OmegaReport r = assemble(bc);
    std::string tail;
    if (!f.json) {
      for (const CaseResult& c : r.cases) print_case(c, h1);
      std::cout << "case b + case c\n" << report::matrix_text(r.conjecture, h1);
      tail = std::string("isotropic: ") + yes(r.conjecture_isotropic) +
             "\nzero: " + yes(r.conjecture_zero) + "\n";
      if (r.conjecture_isotropic) tail += "a (b + c = a h1 I): " + to_string(r.conjecture_a) + "\n";
    }
    return finish(report::case_suite(bc), f, report::conjecture_json(r, h1), tail);
  }

  if (f.command == "oracle") {
    oracle::Options opt;
    if (h1) opt.h1 = h1->get_d();
    const auto cases = selected_cases(f);
    return finish(report::oracle_suite(cases, opt), f, nullptr, "");
  }
  throw CLI::ValidationError("command", "unknown command " + f.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact boundary residue form Omega_3 in dimension four"};
  app.set_version_flag("--version", report::kVersion);
  Flags f;
  app.add_option("command", f.command, "identities | cases | omega3 | conjecture | enumerate | oracle")
      ->required()
      ->check(CLI::IsMember({"identities", "cases", "omega3", "conjecture", "enumerate", "oracle"}));
  app.add_option("--case", f.case_id, "one of aI, aII, aIII, b, c");
  app.add_flag("--general", f.general, "enumerate without the x_n-independence assumption");
  app.add_flag("--json", f.json, "machine-readable report");
  app.add_option("--h1", f.h1_text, "rational value substituted for h1 in reports");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run(f);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::parse || e.kind() == ErrorKind::unsupported_case ? 2 : 1;
  }
}
