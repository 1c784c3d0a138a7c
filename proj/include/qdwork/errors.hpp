#ifndef QDWORK_ERRORS_HPP
#define QDWORK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdwork {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

class NonExactDivision : public Error {
public:
    explicit NonExactDivision(const std::string& what = "division leaves a nonzero remainder")
        : Error(what) {}
};

class BothZero : public Error {
public:
    explicit BothZero(const std::string& what = "gcd(0, 0) is undefined") : Error(what) {}
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Raised when n^r exceeds the configured size guard of a driver.
class SizeGuardExceeded : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

class InvalidModulus : public Error {
public:
    using Error::Error;
};

class NotPIntegral : public Error {
public:
    using Error::Error;
};

class ZeroValuation : public Error {
public:
    explicit ZeroValuation(const std::string& what = "valuation of zero is +infinity")
        : Error(what) {}
};

class HypothesisViolation : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

/// Malformed or inconsistent scan configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace qdwork

#endif  // QDWORK_ERRORS_HPP
