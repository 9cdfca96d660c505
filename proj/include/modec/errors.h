#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modec {

// Process exit codes used by the CLI.
enum class ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kConfig = 2,
    kArtifactMissing = 3,
    kContract = 4,
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual ExitCode exit_code() const noexcept { return ExitCode::kFailure; }
};

// Invalid or inconsistent configuration. `field` is a dotted path into the config.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg, std::string field = {})
        : Error(field.empty() ? msg : field + ": " + msg), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }
    ExitCode exit_code() const noexcept override { return ExitCode::kConfig; }

private:
    std::string field_;
};

// A required file produced by an earlier command is absent.
class ArtifactMissingError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::kArtifactMissing; }
};

// A caller broke an operation's precondition (shape mismatch, out-of-support symbol, ...).
class ContractError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::kContract; }
};

// Malformed bitstream or checkpoint container.
class FormatError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::kContract; }
};

class BadMagicError : public FormatError {
public:
    using FormatError::FormatError;
};

class VersionMismatchError : public FormatError {
public:
    using FormatError::FormatError;
};

class TruncatedError : public FormatError {
public:
    using FormatError::FormatError;
};

// Entropy decoding failed; `offset` is the byte position where the failure was detected.
class DecodeError : public FormatError {
public:
    DecodeError(const std::string& msg, std::size_t offset)
        : FormatError(msg + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Expert weights changed under a component that pinned their digest.
class DigestMismatchError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::kContract; }
};

}  // namespace modec
