#pragma once

#include <stdexcept>
#include <string>

namespace polyperm {

/// Shapes, selectors or transforms that do not fit the object they are applied to.
class ShapeError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A shape or a search exceeds its configured budget.
class CapacityError : public std::length_error
{
public:
    using std::length_error::length_error;
};

/// Input violates the precondition of an operation (not a unitrade, not a latin hypercube, ...).
class MalformedInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// File contents that cannot be parsed.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace polyperm
