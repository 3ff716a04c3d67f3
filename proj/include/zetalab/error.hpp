#ifndef ZETALAB_ERROR_HPP
#define ZETALAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zetalab {

enum class ErrorKind {
    domain,       // argument outside the region where the formula is defined
    pole,         // argument on (or numerically at) a pole
    degenerate,   // a prefactor or denominator vanished
    accuracy,     // requested tolerance not reached within the budget
    evaluation,   // a term or integrand produced a non-finite value
    config,       // invalid algorithm configuration (order, precision, ...)
    resource,     // memory cap exceeded
};

inline const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::pole: return "pole error";
    case ErrorKind::degenerate: return "degeneracy error";
    case ErrorKind::accuracy: return "accuracy error";
    case ErrorKind::evaluation: return "evaluation error";
    case ErrorKind::config: return "configuration error";
    case ErrorKind::resource: return "resource error";
    }
    return "error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& w) : Error(ErrorKind::domain, w) {}
};

class PoleError : public Error {
public:
    explicit PoleError(const std::string& w) : Error(ErrorKind::pole, w) {}
};

class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& w) : Error(ErrorKind::degenerate, w) {}
};

// Carries the error actually achieved (as a double; only its magnitude matters).
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& w, double achieved)
        : Error(ErrorKind::accuracy, w + " (achieved error " + std::to_string(achieved) + ")"),
          achieved_(achieved)
    {
    }
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

class EvaluationError : public Error {
public:
    EvaluationError(const std::string& w, long index)
        : Error(ErrorKind::evaluation, w + " at index " + std::to_string(index)), index_(index)
    {
    }
    long index() const noexcept { return index_; }

private:
    long index_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& w) : Error(ErrorKind::config, w) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& w) : Error(ErrorKind::resource, w) {}
};

} // namespace zetalab

#endif
