#pragma once

#include <stdexcept>
#include <string>

namespace hopfind {

/// Bad arguments or ill-formed input: conductor mismatches, wrong dimensions,
/// violated preconditions, unparseable files.
class usage_error : public std::invalid_argument {
 public:
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

/// The input parsed fine but does not define the claimed mathematical object
/// (failed axiom, singular system, impossible normalization).
class math_error : public std::runtime_error {
 public:
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

/// Two computation routes that must agree exactly did not.
class crosscheck_error : public std::runtime_error {
 public:
  explicit crosscheck_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hopfind
