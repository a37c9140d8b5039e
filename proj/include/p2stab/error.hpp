#pragma once

#include <stdexcept>
#include <string>

namespace p2stab {

// Exit codes of the command-line tool map one-to-one onto these kinds.
enum class ErrorKind {
    invalid_input = 2,
    verification = 3,
    incomplete = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what) {
    throw Error(ErrorKind::invalid_input, what);
}

[[noreturn]] inline void fail_verification(const std::string& what) {
    throw Error(ErrorKind::verification, what);
}

inline void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
}

}  // namespace p2stab
