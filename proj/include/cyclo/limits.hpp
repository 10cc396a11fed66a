#pragma once

#include <cstdlib>
#include <string>

#include "cyclo/arith.hpp"
#include "cyclo/error.hpp"

namespace cyclo {

/// Resource bounds. Exact polynomials are capped by degree; truncated
/// products are not, since their cost depends only on T.
struct Limits {
  u64 degree_budget = 1'000'000;
  u64 scan_ceiling = default_scan_ceiling;

  /// Defaults overridden by CYCLO_DEGREE_BUDGET and CYCLO_SCAN_CEILING.
  static Limits from_environment() {
    Limits l;
    l.degree_budget = read("CYCLO_DEGREE_BUDGET", l.degree_budget);
    l.scan_ceiling = read("CYCLO_SCAN_CEILING", l.scan_ceiling);
    return l;
  }

 private:
  static u64 read(const char* name, u64 fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    const std::string text(raw);
    std::size_t used = 0;
    u64 v = 0;
    try {
      if (text[0] == '-') throw std::invalid_argument("sign");
      v = std::stoull(text, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != text.size() || v == 0)
      throw Error(ErrorCode::invalid_argument, std::string(name) + " must be a positive integer");
    return v;
  }
};

}  // namespace cyclo
