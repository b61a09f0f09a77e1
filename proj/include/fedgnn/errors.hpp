#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fedgnn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct WireError : Error {
    using Error::Error;
};

struct ConnectionError : Error {
    using Error::Error;
};

// Raised when a forward pass needs remote rows that are not cached.
// `missing` holds (layer, global node id) pairs.
struct CacheMissError : Error {
    std::vector<std::pair<int, std::uint64_t>> missing;

    CacheMissError(const std::string& msg,
                   std::vector<std::pair<int, std::uint64_t>> miss)
        : Error(msg), missing(std::move(miss)) {}
};

}  // namespace fedgnn
