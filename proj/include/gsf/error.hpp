#pragma once

#include <stdexcept>
#include <string>

namespace gsf {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Function evaluated exactly at a pole (e.g. K(1)).
class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

/// Both Bogoliubov coefficients vanish: the mode factor is undefined.
class DegenerateModeError : public Error {
public:
    explicit DegenerateModeError(const std::string& msg) : Error(msg) {}
};

/// Iterative or adaptive numerics did not reach the requested accuracy.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& msg) : Error(msg) {}
};

}  // namespace gsf
