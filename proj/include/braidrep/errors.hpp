#pragma once

#include <stdexcept>
#include <string>

namespace braidrep {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EvalAtZero : Error {
    EvalAtZero() : Error("evaluation at t=0 with negative exponents present") {}
    explicit EvalAtZero(const std::string& msg) : Error(msg) {}
};

struct ExponentOverflow : Error {
    ExponentOverflow() : Error("exponent arithmetic overflow") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct TupleTooShort : Error {
    explicit TupleTooShort(std::size_t n)
        : Error("tuple length " + std::to_string(n) + " < 2") {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct NotBinaryTuple : Error {
    NotBinaryTuple() : Error("tuple entries must all be 0 or 1") {}
};

struct DimMismatch : Error {
    DimMismatch(std::size_t a, std::size_t b)
        : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct NonInvertibleScale : Error {
    explicit NonInvertibleScale(std::size_t column)
        : Error("scale at column " + std::to_string(column) +
                " is not a unit of the Laurent ring") {}
};

struct MissingQEntry : Error {
    MissingQEntry(int a, int b)
        : Error("q-table is missing entry (" + std::to_string(a) + "," + std::to_string(b) + ")") {}
};

struct ZeroQEntry : Error {
    ZeroQEntry(int a, int b)
        : Error("q-table entry (" + std::to_string(a) + "," + std::to_string(b) +
                ") is zero; every q value must be a nonzero scalar") {}
};

struct BadRange : Error {
    explicit BadRange(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct ZeroGenerator : Error {
    explicit ZeroGenerator(std::size_t pos)
        : Error("generator index 0 is not a valid braid letter (at position " +
                std::to_string(pos) + ")") {}
};

struct GeneratorOutOfRange : Error {
    GeneratorOutOfRange(int letter, int n)
        : Error("braid letter " + std::to_string(letter) + " out of range for n=" +
                std::to_string(n) + " (need |letter| <= " + std::to_string(n - 1) + ")") {}
};

/// A scalar evaluated to zero where a nonzero value is required
/// (e.g. a generator scale at a specialization point).
struct DegenerateEvaluation : Error {
    explicit DegenerateEvaluation(const std::string& msg) : Error(msg) {}
};

}  // namespace braidrep
