#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fankit {

// Bad argument or out-of-range vertex. Maps to a usage error at the CLI.
using DomainError = std::domain_error;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), detail_(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

// A constructive step (pruning, blade growth) could not be carried out.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured budget was exhausted. `lower_bound` is the best value certified so far.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, long long lower_bound = 0)
        : std::runtime_error(what), lower_bound_(lower_bound) {}

    long long lower_bound() const noexcept { return lower_bound_; }

private:
    long long lower_bound_;
};

} // namespace fankit
