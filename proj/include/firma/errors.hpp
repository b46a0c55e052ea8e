#pragma once

#include <stdexcept>
#include <string>

namespace firma {

// Malformed input bytes/text (bad magic, bad row layout, unreadable file).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Inputs that parse individually but disagree with each other (count mismatch).
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Dimension / length mismatch between tensors or parameter vectors.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid or inconsistent experiment configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace firma
