#ifndef TANGLEDEC_ERRORS_HPP
#define TANGLEDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tangledec {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: unknown vertices, malformed files, malformed orientations,
// dimension mismatches. Maps to exit code 2 in the CLI.
class MalformedInput : public Error {
public:
    explicit MalformedInput(const std::string& what) : Error(what) {}
};

// An instance exceeds a configured enumeration cap.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

// A condition the underlying theory guarantees has failed. Always a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what)
        : Error("internal error (this is a bug): " + what) {}
};

} // namespace tangledec

#endif // TANGLEDEC_ERRORS_HPP
