#pragma once

#include <stdexcept>
#include <string>

namespace lrcc {

// Failure classes map onto CLI exit codes: usage/parse -> 1,
// mathematical violation (with witness in the message) -> 2,
// work ceiling -> 3.
enum class ErrorClass { usage = 1, math = 2, ceiling = 3 };

enum class Errc {
  not_prime,
  reducible,
  too_large,
  no_subfield_marked,
  order_does_not_divide,
  mixed_towers,
  index_out_of_range,
  empty_support,
  singular,
  no_solution,
  dimension_mismatch,
  zero_code,
  work_ceiling_exceeded,
  not_a_codeword,
  local_decode_failure,
  hypothesis_violated,
  no_invertible_permutation,
  scaling_not_certified,
  condition_g_violated,
  duplicate_points,
  field_too_small,
  basis_not_independent,
  requires_h_equals_r,
  not_single_coset,
  precondition_violated,
  parse_error,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, ErrorClass cls, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        class_(cls) {}

  Errc code() const { return code_; }
  ErrorClass error_class() const { return class_; }
  int exit_code() const { return static_cast<int>(class_); }

 private:
  Errc code_;
  ErrorClass class_;
};

[[noreturn]] inline void fail_math(Errc c, const std::string& msg) {
  throw Error(c, ErrorClass::math, msg);
}
[[noreturn]] inline void fail_usage(Errc c, const std::string& msg) {
  throw Error(c, ErrorClass::usage, msg);
}

// Work-ceiling failures carry how far the computation got.
class WorkCeilingError : public Error {
 public:
  WorkCeilingError(std::string msg, long long progress, long long partial_bound = -1)
      : Error(Errc::work_ceiling_exceeded, ErrorClass::ceiling, std::move(msg)),
        progress_(progress),
        partial_bound_(partial_bound) {}

  long long progress() const { return progress_; }
  // For distance searches: all weights below this are known dependence-free.
  long long partial_lower_bound() const { return partial_bound_; }

 private:
  long long progress_;
  long long partial_bound_;
};

}  // namespace lrcc
