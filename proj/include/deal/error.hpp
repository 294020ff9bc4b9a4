#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace deal {

/// Toolkit-wide error. `rule` is a stable machine-readable token naming the
/// violated rule (e.g. "eta_exceeds_ell"); what() prepends it to the message.
class Error : public std::runtime_error {
public:
    Error(std::string rule, const std::string& message)
        : std::runtime_error(rule + ": " + message), rule_(std::move(rule)) {}

    const std::string& rule() const noexcept { return rule_; }

private:
    std::string rule_;
};

}  // namespace deal
