#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dualbent/bent.hpp"

namespace dualbent::cli {

/// Everything a subcommand may need, as typed on the command line. Element
/// parameters stay as text until the family fixes which field they live in.
struct RunConfig {
  std::string command;
  std::uint32_t p = 3;
  std::optional<std::uint32_t> n;
  std::vector<std::uint32_t> degrees;
  std::optional<std::uint32_t> m;
  std::uint32_t t = 0;
  std::string family = "ext-square";
  std::string e = "1";
  std::uint64_t u = 1;
  std::vector<std::string> alphas;
  std::string beta = "1";
  std::string gamma = "1";
  std::vector<std::string> l_coeffs{"1"};
  std::optional<std::string> a;
  bool all = false;
  std::optional<std::int64_t> psi_index;
  std::string out;
  std::string mode;
  unsigned threads = 1;

  bool has_instance() const { return n.has_value() || !degrees.empty(); }
};

/// Domain degrees implied by --degrees or by --n and the family.
std::vector<std::uint32_t> resolve_degrees(const RunConfig& cfg);

/// Parses an element given as a code or the keyword "primitive".
Code parse_element(const std::string& text, std::uint32_t p, std::uint32_t k, const std::string& what);

/// make_bent from the command line; raises InvalidArgument on bad input.
BentSpec build_spec(const RunConfig& cfg);

}  // namespace dualbent::cli
