#ifndef BRAIDPERM_VERIFY_HPP
#define BRAIDPERM_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braidperm/enumerate.hpp"
#include "braidperm/io.hpp"

namespace braidperm
{

struct VerifyConfig
{
  std::vector<std::size_t> degrees{1, 2, 3, 4};
  std::vector<std::size_t> strands{3, 4};
  std::vector<std::string> claims; ///< resolved ids; empty runs every default claim
  std::uint64_t seed = 1;
  std::size_t cap = default_enumeration_cap;
  std::size_t random_instances = 1000;
};

struct ClaimInfo
{
  std::string id;
  std::string name; ///< descriptive alias accepted on the command line
  std::string summary;
  bool in_default_run = true;
};

std::vector<ClaimInfo> const &claim_table();

/// Accepts either the id or the descriptive name; throws std::invalid_argument.
std::string resolve_claim(std::string_view name);

struct ReportEntry
{
  std::string claim;
  std::string check;
  json parameters;
  json witness;
  bool pass = false;
};

struct VerificationReport
{
  VerifyConfig config;
  std::vector<ReportEntry> entries;

  bool all_pass() const;
  json to_json() const;
  /// One line per entry.
  std::string to_text() const;
};

/// Throws std::invalid_argument when the grid is out of range (d in [1,5],
/// n in [3,6]).
void validate(VerifyConfig const &config);

VerificationReport run_verification(VerifyConfig const &config);

} // namespace braidperm

#endif // BRAIDPERM_VERIFY_HPP
