#pragma once

#include <stdexcept>
#include <string>

namespace jscore {

/// Raised for every contract violation in the library (bad input, impossible request).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace jscore
