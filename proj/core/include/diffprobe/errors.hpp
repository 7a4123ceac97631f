#pragma once

#include <stdexcept>
#include <string>

namespace diffprobe {

/// Bad user-supplied configuration (schedule bounds, layouts, config files).
struct invalid_config_error : std::runtime_error {
  explicit invalid_config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad runtime input (shape mismatch, out-of-range step, unknown block).
struct invalid_input_error : std::invalid_argument {
  explicit invalid_input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Cache file failed a schema or checksum check; message names the field.
struct corrupt_cache_error : std::runtime_error {
  explicit corrupt_cache_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Artifact digests disagree with what the consumer expects.
struct provenance_error : std::runtime_error {
  explicit provenance_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Degenerate numeric input (all-constant CKA matrix, etc.).
struct degenerate_input_error : std::runtime_error {
  explicit degenerate_input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A sweep finished with zero successful cells.
struct empty_sweep_error : std::runtime_error {
  explicit empty_sweep_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace diffprobe
