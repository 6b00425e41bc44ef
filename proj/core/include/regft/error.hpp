#pragma once

#include <stdexcept>
#include <string>

namespace regft {

// Exit-code contract for the CLI: 0 success, 1 usage, 2 validation, 3 runtime.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input data; carries a 1-based line number when known.
class CorpusParseError : public ValidationError {
public:
    CorpusParseError(const std::string& msg, std::size_t line)
        : ValidationError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RemoteError : public std::runtime_error {
public:
    RemoteError(const std::string& msg, int attempts, int received = 0)
        : std::runtime_error(msg), attempts_(attempts), received_(received) {}
    int attempts() const noexcept { return attempts_; }
    int received() const noexcept { return received_; }

private:
    int attempts_;
    int received_;
};

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const UsageError*>(&e)) return 1;
    if (dynamic_cast<const ValidationError*>(&e)) return 2;
    return 3;
}

}  // namespace regft
