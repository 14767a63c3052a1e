#pragma once

#include <stdexcept>
#include <string>

namespace fatdelta {

/// Raised whenever an operation's precondition is violated (size mismatch,
/// index out of range, non-commuting square, malformed literal, ...).
class Error : public std::invalid_argument
{
public:
    explicit Error(const std::string& what)
        : std::invalid_argument(what)
    {
    }
};

} // namespace fatdelta
