#pragma once

#include <stdexcept>
#include <string>

namespace hindeval {

// Bad input data: missing files, malformed lines, encoding problems.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration: invalid parameters, unknown metric names.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hindeval
