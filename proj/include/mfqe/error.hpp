#pragma once

#include <stdexcept>
#include <string>

namespace mfqe {

// Base error for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments, malformed configs, violated preconditions. CLI maps these to exit 1.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// File system and file format failures. CLI maps these to exit 2.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Checkpoint declares a different architecture than the caller expects.
class ConfigMismatchError : public Error {
public:
    explicit ConfigMismatchError(const std::string& msg) : Error(msg) {}
};

// Training hit a non-finite loss. The trainer keeps the last good parameters.
class TrainingDivergedError : public Error {
public:
    TrainingDivergedError(const std::string& msg, long step) : Error(msg), step(step) {}
    long step = 0;
};

}  // namespace mfqe
