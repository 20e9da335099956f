#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "lrcc/errors.hpp"

namespace lrcc {

// Knobs shared by the exhaustive checks. Ceilings are in abstract work
// units (one unit ~ one column-subset elimination step or one enumerated
// codeword); LRCC_WORK_CEILING overrides both ceilings at once.
struct Config {
  std::uint64_t field_size_ceiling = 1u << 20;
  std::uint64_t distance_work_ceiling = 10'000'000;
  std::uint64_t mr_work_ceiling = 10'000'000;
  std::uint64_t enumeration_limit = 1u << 22;  // q^k above this -> column search
  unsigned threads = 0;                        // 0 = hardware_concurrency
  std::uint64_t seed = 0x5eed;

  static Config from_env() {
    Config cfg;
    if (const char* v = std::getenv("LRCC_WORK_CEILING")) {
      char* end = nullptr;
      unsigned long long ceil = std::strtoull(v, &end, 10);
      if (end == v || ceil == 0) {
        fail_usage(Errc::parse_error, "LRCC_WORK_CEILING must be a positive integer");
      }
      cfg.distance_work_ceiling = ceil;
      cfg.mr_work_ceiling = ceil;
    }
    return cfg;
  }
};

// Simple budget meter used by the exhaustive searches.
struct WorkMeter {
  std::uint64_t budget;
  std::uint64_t used = 0;

  explicit WorkMeter(std::uint64_t b) : budget(b) {}

  // Returns false once the budget is exhausted; the caller decides how to
  // report partial progress.
  bool charge(std::uint64_t units) {
    used += units;
    return used <= budget;
  }
};

}  // namespace lrcc
