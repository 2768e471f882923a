#pragma once

#include <stdexcept>
#include <string>

namespace witt2 {

enum class ErrorKind {
    Parse,
    Unsupported,
    DescriptorMismatch,
    DivisionByZero,
    Inseparable,
    Reducible,
    Singular,
    Precondition,
    Uncertified,
    Internal,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it onto a stable exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace witt2
