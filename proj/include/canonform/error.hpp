#ifndef CANONFORM_ERROR_HPP
#define CANONFORM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace canonform {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct NotPrime : Error {
    using Error::Error;
};

struct NotSquare : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct Singular : Error {
    using Error::Error;
};

struct NotMonic : Error {
    using Error::Error;
};

struct NonpositiveSize : Error {
    using Error::Error;
};

// Wrong entry count in a matrix file.
struct DimensionError : Error {
    using Error::Error;
};

// An internal consistency check on a computed certificate failed.
struct CertificateInvalid : Error {
    using Error::Error;
};

// Text input rejected; line/column are 1-based, 0 when unknown.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace canonform

#endif
