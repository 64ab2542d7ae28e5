#pragma once

#include <stdexcept>
#include <string>

namespace ufrac {

// Thrown when a configured cap (level size, digit count, subset count,
// factoring budget, horizon) refuses a request. The message names the cap.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ufrac
