// SPDX-License-Identifier: Apache-2.0
#ifndef GOLAYBEAM_ERRORS_HPP
#define GOLAYBEAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace golaybeam {

// Malformed or inconsistent input (bad dimensions, out-of-range angles,
// unparseable files). CLI maps this to exit code 2.
class invalid_input : public std::runtime_error {
  public:
    explicit invalid_input(const std::string &msg) : std::runtime_error(msg) {}
};

// A requested verification did not hold. CLI maps this to exit code 1.
class verification_failure : public std::runtime_error {
  public:
    explicit verification_failure(const std::string &msg) : std::runtime_error(msg) {}
};

// Request exceeds a configured compute budget. CLI maps this to exit code 3.
class resource_limit : public std::runtime_error {
  public:
    explicit resource_limit(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace golaybeam

#endif
