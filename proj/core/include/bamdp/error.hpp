#pragma once

#include <stdexcept>
#include <string>

namespace bamdp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A state, action, or outcome index outside the model's range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// A belief whose parameters cannot support the requested prediction or sample.
class DegenerateBeliefError : public Error {
public:
    using Error::Error;
};

/// Malformed MDP (non-stochastic rows, rewards outside [0,1], empty spaces).
class InvalidMdpError : public Error {
public:
    using Error::Error;
};

class InvalidDiscountError : public Error {
public:
    using Error::Error;
};

/// Tree misuse, e.g. expanding a node that already has children.
class StructuralError : public Error {
public:
    using Error::Error;
};

class NoSamplesError : public Error {
public:
    using Error::Error;
};

/// A leaf reached by backwards induction without an assigned value.
class IncompleteValuationError : public Error {
public:
    using Error::Error;
};

/// A node lacks the bound data an expansion strategy needs.
class IncompleteNodeError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace bamdp
