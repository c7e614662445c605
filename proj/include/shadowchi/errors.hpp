#pragma once

#include <stdexcept>
#include <string>

namespace shadowchi {

// Caller supplied something outside an operation's domain.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A structural guarantee of the construction did not hold. Seeing one of
// these means either a bug here or a counterexample to the checked property.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// An exhaustive search ran out of its time budget before deciding.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shadowchi
