#pragma once

#include <stdexcept>
#include <string>

namespace ea {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scale elements from incompatible scale groups combined in one expression.
struct ScaleMismatchError : Error {
    using Error::Error;
};

/// Dilation argument outside the model's locality ball.
struct LocalityError : Error {
    using Error::Error;
};

/// Carrier constraint violated (dimension, unit norm, antipodal pair, invalid payload).
struct DomainError : Error {
    using Error::Error;
};

/// Invalid experiment or model configuration.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace ea
