#pragma once

#include <stdexcept>
#include <string>

namespace seu {

// Bad caller input: malformed files, out-of-range vertices, invalid parameters.
// Maps to CLI exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size guard declined the computation. Never a wrong answer,
// always an explicit refusal. Maps to CLI exit code 2.
class guard_refusal : public std::runtime_error {
public:
    explicit guard_refusal(const std::string& what) : std::runtime_error(what) {}
};

} // namespace seu
