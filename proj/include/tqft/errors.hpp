#pragma once

#include <stdexcept>
#include <string>

namespace tqft {

// Violation of an internal invariant (as opposed to bad user input, which is
// reported with std::invalid_argument).  Carries the name of the invariant so
// the CLI can surface it and exit with code 1.
class invariant_error : public std::runtime_error {
public:
    invariant_error(std::string invariant, const std::string& detail)
        : std::runtime_error(invariant + ": " + detail),
          invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

} // namespace tqft
