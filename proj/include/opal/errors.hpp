#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace opal {

// Error classes map onto the CLI exit codes: 1 = malformed input
// (parse/spec problems), 2 = structurally valid input that an operation
// rejects, 3 = configured resource budget exhausted.
enum class ErrorClass { Input = 1, Operation = 2, Resource = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& message)
        : std::runtime_error(message), cls_(cls) {}

    ErrorClass error_class() const noexcept { return cls_; }

private:
    ErrorClass cls_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(ErrorClass::Input,
                message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownSymbol : public ParseError {
public:
    UnknownSymbol(const std::string& name, std::size_t position)
        : ParseError("unknown symbol '" + name + "'", position), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DuplicateName : public Error {
public:
    explicit DuplicateName(const std::string& name)
        : Error(ErrorClass::Input, "duplicate name '" + name + "'"), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// A generator's derivation table misses an entry: the field would not be
// closed under that derivation.
class ClosureError : public Error {
public:
    ClosureError(std::string generator, std::string derivation)
        : Error(ErrorClass::Input, "derivative of generator '" + generator +
                                       "' under '" + derivation + "' is not defined"),
          generator_(std::move(generator)),
          derivation_(std::move(derivation)) {}

    const std::string& generator() const noexcept { return generator_; }
    const std::string& derivation() const noexcept { return derivation_; }

private:
    std::string generator_;
    std::string derivation_;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error(ErrorClass::Operation, "division by zero") {}
};

class SpecMismatch : public Error {
public:
    SpecMismatch() : Error(ErrorClass::Operation, "operands belong to different field specs") {}
};

class ZeroOperator : public Error {
public:
    explicit ZeroOperator(const std::string& what)
        : Error(ErrorClass::Operation, what + " of the zero operator is undefined") {}
};

class WrongArity : public Error {
public:
    explicit WrongArity(const std::string& message) : Error(ErrorClass::Operation, message) {}
};

class EmptyFactorList : public Error {
public:
    EmptyFactorList() : Error(ErrorClass::Operation, "factor list is empty") {}
};

class InvalidChain : public Error {
public:
    explicit InvalidChain(const std::string& message) : Error(ErrorClass::Operation, message) {}
};

class MismatchedTop : public Error {
public:
    MismatchedTop() : Error(ErrorClass::Operation, "chains do not start at the same ideal") {}
};

class UnknownName : public Error {
public:
    UnknownName(const std::string& kind, const std::string& name)
        : Error(ErrorClass::Operation, "no " + kind + " named '" + name + "'") {}
};

class ResourceExceeded : public Error {
public:
    explicit ResourceExceeded(const std::string& message)
        : Error(ErrorClass::Resource, message) {}
};

}  // namespace opal
