#pragma once

#include <stdexcept>
#include <string>

namespace polyprime {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// grid
class EmptyInput : public Error {
public:
    EmptyInput() : Error("grid contains no '#' cell") {}
};

class BadChar : public Error {
public:
    explicit BadChar(char c, std::size_t line, std::size_t column)
        : Error("unexpected character '" + std::string(1, c) + "' at line " + std::to_string(line) +
                ", column " + std::to_string(column)),
          character(c) {}
    char character;
};

class Disconnected : public Error {
public:
    Disconnected() : Error("cells are not edge-connected") {}
};

class CapExceeded : public Error {
public:
    CapExceeded(int n, int cap)
        : Error("requested " + std::to_string(n) + " cells exceeds enumeration cap " + std::to_string(cap)) {}
};

// graph
class LimitExceeded : public Error {
public:
    explicit LimitExceeded(std::size_t budget)
        : Error("cycle enumeration budget of " + std::to_string(budget) + " partial paths exhausted") {}
};

class MissingVertex : public Error {
public:
    using Error::Error;
};

// algebra
class VariableSetMismatch : public Error {
public:
    VariableSetMismatch(std::size_t a, std::size_t b)
        : Error("variable set mismatch: " + std::to_string(a) + " vs " + std::to_string(b) + " variables") {}
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace polyprime
