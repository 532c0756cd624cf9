#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"

namespace dualbent::cli {

struct VerifyRecord {
  std::string name;
  std::string anchor;  // the statement the check reproduces
  bool ok = true;
  double max_residual = 0;
  std::string counterexample;
  std::string note;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyRecord> records;

  bool ok() const;
  void print(std::ostream& out) const;
  nlohmann::json to_json() const;
};

VerifyReport verify_characters(const RunConfig& cfg);
VerifyReport verify_bent(const RunConfig& cfg);
VerifyReport verify_sums(const RunConfig& cfg);
VerifyReport verify_codebooks(const RunConfig& cfg);
/// `which` is empty for every row, else e.g. "tab1-row2".
VerifyReport verify_tables(const std::string& which, unsigned threads);

/// One row of the two published parameter tables.
struct TableRow {
  std::string id;
  std::uint32_t p, n, m;
  int table;
  std::string N, K, imax, welch, ratio;  // as printed
};
const std::vector<TableRow>& table_rows();

}  // namespace dualbent::cli
