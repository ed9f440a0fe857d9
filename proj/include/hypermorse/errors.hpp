#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hypermorse {

/// Process exit codes used by the command-line front end.
enum class ExitCode : int {
    ok = 0,
    parse = 2,
    validation = 3,
    condition_c = 4,
    internal = 5,
};

/// Base class of every error raised by the library. Each error carries the
/// exit code the CLI reports for it and an optional list of diagnostics.
class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& what, std::vector<std::string> diagnostics = {})
        : std::runtime_error(what), code_(code), diagnostics_(std::move(diagnostics)) {}

    ExitCode code() const noexcept { return code_; }
    const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

private:
    ExitCode code_;
    std::vector<std::string> diagnostics_;
};

/// Malformed input: unreadable files, bad syntax, ill-formed hypergraphs.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::vector<std::string> diagnostics = {})
        : Error(ExitCode::parse, what, std::move(diagnostics)) {}
};

/// Well-formed input that violates a mathematical precondition.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what, std::vector<std::string> diagnostics = {})
        : Error(ExitCode::validation, what, std::move(diagnostics)) {}
};

class ConditionCError : public Error {
public:
    explicit ConditionCError(const std::string& what, std::vector<std::string> witnesses = {})
        : Error(ExitCode::condition_c, what, std::move(witnesses)) {}
};

/// A guaranteed property failed to hold. Always a bug or a broken invariant.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what, std::vector<std::string> diagnostics = {})
        : Error(ExitCode::internal, what, std::move(diagnostics)) {}
};

class Cancelled : public Error {
public:
    Cancelled() : Error(ExitCode::internal, "computation cancelled") {}
};

}  // namespace hypermorse
