#pragma once

#include <stdexcept>
#include <string>

namespace bettisplit {

// Error taxonomy shared by the library and the CLI.  The CLI maps
// parse/io errors to exit code 1 and precondition/resource errors to
// exit code 2.
enum class ErrorKind { Parse, Io, Precondition, Resource, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error parse_error(const std::string& msg) { return Error(ErrorKind::Parse, msg); }
inline Error io_error(const std::string& msg) { return Error(ErrorKind::Io, msg); }
inline Error precondition_error(const std::string& msg) { return Error(ErrorKind::Precondition, msg); }
inline Error resource_error(const std::string& msg) { return Error(ErrorKind::Resource, msg); }
inline Error internal_error(const std::string& msg) { return Error(ErrorKind::Internal, msg); }

} // namespace bettisplit
