#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

// Parameter outside the domain of an operation (exit code 2 in the CLI).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An excluded integer difference puts a closed form on a Gamma pole.
class DegenerateParameters : public DomainError {
public:
    using DomainError::DomainError;
};

// Too few usable entries for a fit.
class InsufficientData : public DomainError {
public:
    using DomainError::DomainError;
};

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class HypothesisFailure : public std::runtime_error {
public:
    HypothesisFailure(const std::string& what, std::vector<std::string> clauses)
        : std::runtime_error(what), clauses_(std::move(clauses)) {}
    const std::vector<std::string>& clauses() const { return clauses_; }

private:
    std::vector<std::string> clauses_;
};

}  // namespace dunkl
