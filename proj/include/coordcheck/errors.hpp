#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coordcheck {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two polynomials (or a polynomial and an operation target) do not share
// a ring presentation.
class PresentationMismatchError : public Error {
public:
    explicit PresentationMismatchError(const std::string& what) : Error(what) {}
};

// A variable name is not declared in the ambient presentation.
class UnknownVariableError : public Error {
public:
    explicit UnknownVariableError(const std::string& name)
        : Error("unknown variable: " + name) {}
};

// Requested the leading term of the zero polynomial.
class ZeroPolynomialError : public Error {
public:
    ZeroPolynomialError() : Error("zero polynomial has no leading term") {}
};

// Wrong number of polynomials/variables for a matrix or derivation operation.
class ArityError : public Error {
public:
    explicit ArityError(const std::string& what) : Error(what) {}
};

// The configured Groebner step budget ran out before the computation finished.
class BudgetExhaustedError : public Error {
public:
    explicit BudgetExhaustedError(std::uint64_t budget)
        : Error("budget exhausted: Groebner computation exceeded " +
                std::to_string(budget) + " reduction steps") {}
};

struct SourcePos {
    std::size_t line = 0;   // 1-based
    std::size_t column = 0; // 1-based
};

// Script syntax or resolution error, with source position.
class ParseError : public Error {
public:
    ParseError(SourcePos pos, const std::string& what)
        : Error("line " + std::to_string(pos.line) + ", column " +
                std::to_string(pos.column) + ": " + what),
          pos_(pos) {}

    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

} // namespace coordcheck
