#ifndef RSCOD_ERRORS_HPP
#define RSCOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rsc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg) : Error(msg) {}
};

// Supplied polynomial is reducible or has a non-primitive root X.
struct NotMinimalPolynomial : Error {
    explicit NotMinimalPolynomial(const std::string& msg) : Error(msg) {}
};

struct DivideByZero : Error {
    explicit DivideByZero(const std::string& msg) : Error(msg) {}
};

struct BadParameters : Error {
    explicit BadParameters(const std::string& msg) : Error(msg) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

struct TooManyErasures : Error {
    explicit TooManyErasures(const std::string& msg) : Error(msg) {}
};

struct InsufficientRank : Error {
    explicit InsufficientRank(const std::string& msg) : Error(msg) {}
};

struct TooManyCorruptRows : Error {
    explicit TooManyCorruptRows(const std::string& msg) : Error(msg) {}
};

struct DependentErrors : Error {
    explicit DependentErrors(const std::string& msg) : Error(msg) {}
};

struct Unmatchable : Error {
    explicit Unmatchable(const std::string& msg) : Error(msg) {}
};

struct CapacityExceeded : Error {
    explicit CapacityExceeded(const std::string& msg) : Error(msg) {}
};

struct BadDistribution : Error {
    explicit BadDistribution(const std::string& msg) : Error(msg) {}
};

struct InfeasibleCapacity : Error {
    explicit InfeasibleCapacity(const std::string& msg) : Error(msg) {}
};

struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& msg) : Error(msg) {}
};

struct NoControlWord : Error {
    explicit NoControlWord(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace rsc

#endif
