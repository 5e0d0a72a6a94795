#pragma once

#include <stdexcept>
#include <string>

namespace mrips {

// Malformed input or an invalid parameter combination.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size cap (simplex count, correspondence grid, oracle size) was exceeded.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool condition, const std::string& message)
{
    if (!condition)
        throw InvalidInput(message);
}

} // namespace detail
} // namespace mrips
