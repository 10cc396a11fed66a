#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo {

enum class ErrorCode {
  invalid_argument,
  arithmetic_overflow,
  non_unit_constant_term,
  degree_budget_exceeded,
  search_bound_exceeded,
  no_plan_found,
  parse_error,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::arithmetic_overflow: return "arithmetic-overflow";
    case ErrorCode::non_unit_constant_term: return "non-unit-constant-term";
    case ErrorCode::degree_budget_exceeded: return "degree-budget-exceeded";
    case ErrorCode::search_bound_exceeded: return "search-bound-exceeded";
    case ErrorCode::no_plan_found: return "no-plan-found";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace checked {

// Overflow-checked primitives. Every coefficient update in the library goes
// through these; wraparound is reported as ErrorCode::arithmetic_overflow.

template <typename T>
T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::arithmetic_overflow, "addition");
  return r;
}

template <typename T>
T sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::arithmetic_overflow, "subtraction");
  return r;
}

template <typename T>
T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::arithmetic_overflow, "multiplication");
  return r;
}

template <typename T>
T neg(T a) {
  return sub(T{0}, a);
}

}  // namespace checked

}  // namespace cyclo
