#pragma once

#include <stdexcept>
#include <string>

namespace steinx {

// Single exception type for rejected inputs and violated preconditions.
// The CLI maps it to exit code 2; "inconclusive" and "exhausted" outcomes
// are ordinary return values, never exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace steinx
