#pragma once

#include <stdexcept>
#include <string>

namespace emsim {

// Bad parameters or inconsistent configuration supplied by the caller/CLI.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a hard enumeration/size guard (e.g. 2^|E| live graphs).
struct CapabilityError : std::runtime_error {
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (parse errors carry the offending line number).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failure (missing file, unwritable path, ...).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace emsim
