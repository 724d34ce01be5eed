#pragma once

#include <stdexcept>
#include <string>

namespace tuttecover {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A basis or independence family that violates the matroid axioms.
/// The message names the violated axiom (I1/I2/I3, exchange, cardinality).
class InvalidMatroid : public Error {
public:
    using Error::Error;
};

/// Ground set larger than the 64-element bitmask capacity, or an
/// enumeration bound was exceeded.
class CapacityExceeded : public Error {
public:
    using Error::Error;
};

/// A label that is not part of the ground set in question.
class UnknownElement : public Error {
public:
    using Error::Error;
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// Attempt to branch a deletion-contraction tree at a loop or coloop.
class DegenerateElement : public Error {
public:
    using Error::Error;
};

class NotALeaf : public Error {
public:
    using Error::Error;
};

class InvalidTree : public Error {
public:
    using Error::Error;
};

class InvalidCover : public Error {
public:
    using Error::Error;
};

class NotIndecomposable : public Error {
public:
    using Error::Error;
};

class NotIndecomposableCover : public Error {
public:
    using Error::Error;
};

/// Two coverings passed to common_refinement do not cover the same matroid.
class TargetMismatch : public Error {
public:
    using Error::Error;
};

/// A formal K0 difference has no Tutte polynomial interpretation.
class NegativeCoefficient : public Error {
public:
    using Error::Error;
};

/// Malformed input file; the message names the offending key or line.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace tuttecover
