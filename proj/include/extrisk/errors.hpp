#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extrisk {

/// Bad argument value supplied by the caller (maps to CLI exit code 2).
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input violates the mathematical domain of an operation (exit code 4).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Malformed or unusable input data, e.g. a broken CSV file (exit code 3).
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Empirical risk with an empty conditioning set. Carries both counts so the
/// caller can distinguish "no data" from "risk 1".
struct undefined_risk_error : std::runtime_error {
  undefined_risk_error(std::size_t num, std::size_t den)
      : std::runtime_error("empirical risk undefined: denominator count is " +
                           std::to_string(den) + " (numerator count " +
                           std::to_string(num) + ")"),
        numerator_count(num),
        denominator_count(den) {}

  std::size_t numerator_count;
  std::size_t denominator_count;
};

/// Training is impossible on the given labels (e.g. a single class).
struct degenerate_training_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace extrisk
