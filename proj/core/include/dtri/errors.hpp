#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace dtri {

// Base class for all library errors. CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input data (bad polygon, bad file, bad parameters). Exit code 3.
class InputError : public Error {
public:
    using Error::Error;
};

enum class PolygonDefect {
    TooFewVertices,
    DegenerateVertex,   // duplicate point or collinear consecutive triple
    NotSimple,          // self-intersecting boundary
    CoordinateRange,    // coordinates too large for exact 128-bit predicates
};

class ValidationError : public InputError {
public:
    ValidationError(PolygonDefect defect, const std::string& msg,
                    int a = -1, int b = -1)
        : InputError(msg), defect(defect), first(a), second(b) {}

    PolygonDefect defect;
    // Offending vertex index / edge pair (edge i is vertices i..i+1), -1 if n/a.
    int first;
    int second;
};

class MeasureDomainError : public InputError {
public:
    using InputError::InputError;
};

class PolygonMismatch : public InputError {
public:
    using InputError::InputError;
};

class WrongCount : public InputError {
public:
    using InputError::InputError;
};

class CrossingDiagonals : public InputError {
public:
    using InputError::InputError;
};

class InvalidDiagonal : public InputError {
public:
    using InputError::InputError;
};

class TooFew : public InputError {
public:
    using InputError::InputError;
};

class NotConvex : public InputError {
public:
    using InputError::InputError;
};

class KTooLarge : public InputError {
public:
    using InputError::InputError;
};

class BadValues : public InputError {
public:
    using InputError::InputError;
};

class RoundingCollision : public InputError {
public:
    using InputError::InputError;
};

class TooManyLayers : public InputError {
public:
    using InputError::InputError;
};

class NotDelaunayTriangulable : public Error {
public:
    using Error::Error;
};

// Fewer feasible solutions than requested. Exit code 2.
class Infeasible : public Error {
public:
    Infeasible(std::int64_t count_found, const std::string& msg)
        : Error(msg), count_found(count_found) {}

    std::int64_t count_found;
};

// A pseudo-polynomial table or enumeration would exceed the guard. Exit code 4.
class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};

// Internal invariant violation. Exit code 5.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace dtri
