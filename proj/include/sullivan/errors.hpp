#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sullivan {

/// A well-formed request the mathematics cannot satisfy (CLI exit code 1).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed model or expression text, or an inconsistent model (CLI exit code 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotACocycle : public DomainError {
public:
    /// `differential` is the printed d(a), kept for diagnosis.
    NotACocycle(const std::string& element, std::string differential)
        : DomainError("NotACocycle: " + element + " has d = " + differential), differential_(std::move(differential)) {}

    [[nodiscard]] const std::string& differential() const { return differential_; }

private:
    std::string differential_;
};

class NotExact : public DomainError {
public:
    explicit NotExact(const std::string& element)
        : DomainError("NotExact: " + element + " is not a coboundary") {}
};

class CupObstruction : public DomainError {
public:
    CupObstruction(const std::string& lhs, const std::string& rhs, const std::string& product)
        : DomainError("CupObstruction: " + lhs + " cup " + rhs + " = " + product + " is nonzero") {}
};

class NonUniqueLift : public DomainError {
public:
    explicit NonUniqueLift(std::size_t coboundary_dim)
        : DomainError("NonUniqueLift: B^1 has dimension " + std::to_string(coboundary_dim) +
                      ", so degree-1 classes have no unique cocycle") {}
};

class DegenerateBasis : public DomainError {
public:
    DegenerateBasis(const std::string& x, const std::string& y)
        : DomainError("DegenerateBasis: " + x + " and " + y + " are linearly dependent") {}
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : InputError("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class ViolationKind { NonHomogeneousDifferential, DifferentialSquaredNonzero, UnknownGenerator, DuplicateGenerator, TooManyGenerators };

const char* to_string(ViolationKind kind);

class ValidationError : public InputError {
public:
    ValidationError(ViolationKind kind, std::string generator, const std::string& detail)
        : InputError(std::string(to_string(kind)) + " at generator '" + generator + "': " + detail),
          kind_(kind),
          generator_(std::move(generator)) {}

    [[nodiscard]] ViolationKind kind() const { return kind_; }
    [[nodiscard]] const std::string& generator() const { return generator_; }

private:
    ViolationKind kind_;
    std::string generator_;
};

}  // namespace sullivan
