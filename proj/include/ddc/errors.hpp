#pragma once

#include <stdexcept>
#include <string>

namespace ddc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fewer than three distinct points, or all points collinear.
struct DegenerateInput : Error {
    using Error::Error;
};

struct NotOverlapping : Error {
    using Error::Error;
};

struct GeometryError : Error {
    using Error::Error;
};

struct UnknownShape : Error {
    using Error::Error;
};

struct SpecError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct InvalidTime : Error {
    using Error::Error;
};

}  // namespace ddc
