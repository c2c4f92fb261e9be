#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sdc::cli {

/// One formula-vs-oracle comparison from `verify`.
struct VerificationRecord {
  std::uint64_t p = 0;
  unsigned r = 0;
  unsigned s = 0;
  std::vector<std::uint64_t> group;  // invariant factors
  std::string quantity;              // NA, NEA, NHA, exists-E, exists-H, NEA-semisimple, ...
  std::string formula;
  std::string oracle;
  std::string oracle_kind;           // "join-closure" or "decomposition"
  bool pass = false;
  std::chrono::microseconds elapsed{0};
};

/// Every formula-vs-oracle check on rings with at most `max_ring_size` elements,
/// sorted by (p, r, s, group, quantity).
std::vector<VerificationRecord> verify_all(std::uint64_t max_ring_size);

/// Runs the tool; `args` excludes the program name. Returns 0 on success,
/// 2 on usage or precondition errors and 1 when a verification fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdc::cli
