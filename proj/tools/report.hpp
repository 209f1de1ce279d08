#pragma once

// Verification suites and report rendering shared by the command-line tool
// and the acceptance runner.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncres/residue_engine.hpp"
#include "oracle.hpp"

namespace ncres::report {

inline constexpr const char* kVersion = "1.0.0";

struct Row {
  std::string name;
  bool pass = false;
  std::string exact;
  std::optional<double> value;
  std::optional<double> rel_err;
};

struct Suite {
  std::string name;
  std::vector<Row> rows;
  bool pass() const;
  const Row* first_failure() const;
  void add(const IdentityCheck& c);
  void add(std::string name, bool pass, std::string exact = "");
  void append(const Suite& other);  // rows prefixed with the other suite's name
};

Suite exterior_suite();
Suite trace_suite();
Suite halfline_suite();
Suite sphere_suite();
Suite symbol_suite();
Suite chain_suite();
Suite enumeration_suite();
Suite case_suite(const std::vector<CaseResult>& cases);
// Per-case rows plus the checks on the total.
Suite case_suite(const OmegaReport& omega);
Suite oracle_suite(const std::vector<CaseResult>& cases, const oracle::Options& opt = {});
// Every identity suite above except cases and oracle.
Suite identities();

std::string exact_text(const ExactScalar& x, const std::optional<Rational>& h1);

nlohmann::json to_json(const Suite& s);
nlohmann::json matrix_json(const CoeffMatrix& m, const std::optional<Rational>& h1);
nlohmann::json cases_json(const std::vector<CaseResult>& cases, const std::optional<Rational>& h1);
nlohmann::json case_json(const CaseResult& c, const std::optional<Rational>& h1);
nlohmann::json omega_json(const OmegaReport& r, const std::optional<Rational>& h1);
nlohmann::json conjecture_json(const OmegaReport& r, const std::optional<Rational>& h1);
nlohmann::json enumeration_json(const EnumerationReport& e, bool general);

// Document with the fixed top-level keys {version, mode, suite, results, omega}.
nlohmann::json document(const std::string& mode, const Suite& s, nlohmann::json omega);

std::string text(const Suite& s);
std::string matrix_text(const CoeffMatrix& m, const std::optional<Rational>& h1);

}  // namespace ncres::report
