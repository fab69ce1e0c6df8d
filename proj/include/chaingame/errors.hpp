#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chaingame {

// Membership and value-range violations (negative coordinates, elements
// outside a poset, malformed descriptors handled by ConfigError instead).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A caller broke an operation's precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Invalid user-facing configuration: bad descriptor, unknown strategy name.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A simulation invariant that should be unreachable failed.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, std::uint64_t nodes)
        : std::runtime_error(what), nodes_(nodes) {}

    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t nodes_;
};

} // namespace chaingame
