#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sylvres {

/// A Sylvester matrix required to be column reduced is not.
class NotColumnReduced : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The y-leading coefficients of a and b share a factor.
class RootsAtInfinity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldTooSmall : public std::runtime_error {
public:
    explicit FieldTooSmall(std::uint64_t required)
        : std::runtime_error("field too small: cardinality at least " + std::to_string(required) + " required"),
          required_(required) {}
    std::uint64_t required() const { return required_; }

private:
    std::uint64_t required_;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace sylvres
