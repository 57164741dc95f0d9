#pragma once

#include <stdexcept>
#include <string>

namespace symgen {

/// Library-wide exception. `code()` is a short stable identifier that the
/// CLI forwards verbatim in its error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace symgen
