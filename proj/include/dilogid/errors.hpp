#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dilogid {

// Argument outside the domain of an evaluator or identity. parameter() names
// the offending argument so front ends can echo it.
class domain_error : public std::domain_error {
public:
    domain_error(std::string parameter, const std::string& what)
        : std::domain_error(what), parameter_(std::move(parameter)) {}

    const std::string& parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

class unsupported_order : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class non_convergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dilogid
