#pragma once

#include <stdexcept>
#include <string>

namespace mirror {

/// Base for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class ValidationError : public Error {
public:
    /// factor < 0 when the failure is not tied to one projective factor.
    ValidationError(int factor, const std::string& what) : Error(what), factor_(factor) {}
    int factor() const { return factor_; }

private:
    int factor_;
};

/// The mirror map could not be solved, or the solved integrand is not O(alpha^-2).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// The extraction identity failed an overdetermination or grading check.
class ExtractionError : public Error {
public:
    using Error::Error;
};

class SamplingError : public Error {
public:
    using Error::Error;
};

class OracleError : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

}  // namespace mirror
