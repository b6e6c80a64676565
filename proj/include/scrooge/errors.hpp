#pragma once

#include <stdexcept>
#include <string>

namespace scrooge {

// Bad user input: unreadable files, malformed records, empty sequences.
// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration: W/O/k out of range, illegal mode/policy combination.
// Also exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant (traceback dead end, window watchdog, ...).
// Indicates a bug, not bad input. The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Read of a DP table cell or bit range the active storage policy discarded.
// Traceback must never trigger this on a valid table.
class OutOfStoredRegionError : public InternalError {
public:
    explicit OutOfStoredRegionError(const std::string& what) : InternalError(what) {}
};

}  // namespace scrooge
