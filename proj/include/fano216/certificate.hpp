#pragma once

#include <map>
#include <string>
#include <vector>

#include "fano216/rational.hpp"

namespace fano216 {

// Machine-readable record tying computed exact values to the quantities they
// instantiate and to a verdict. Serialized as canonical JSON; identical
// inputs must produce byte-identical output.
struct Certificate {
  std::string command;
  std::vector<std::pair<std::string, std::string>> models;  // (name, content hash)
  std::vector<std::pair<std::string, std::string>> results; // name -> exact value "p/q"
  std::vector<std::pair<std::string, std::string>> anchors; // result name -> source label
  std::vector<std::string> verdicts;
  std::vector<std::string> discrepancies;

  void add_result(const std::string& name, const Rational& value,
                  const std::string& anchor = "");
  std::string to_json() const;
};

struct GoldenEntry {
  std::string name;
  std::string expected;  // exact rational literal
  std::string anchor;
};

// The golden table: every paper constant the artifact reproduces, each
// appearing exactly once.
const std::vector<GoldenEntry>& golden_table();

struct GoldenOutcome {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

// Runs the full golden suite (cases evaluated in parallel, combined in
// order). All values recompute from the shipped models.
std::vector<GoldenOutcome> run_golden(const std::string& data_dir, bool parallel = true);

}  // namespace fano216
