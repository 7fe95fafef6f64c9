#pragma once

#include <stdexcept>

namespace hmalab {

// A size guard refused an enumeration that would explode.
class GuardViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A valuation table breaks the constraint of its state class.
class ConstraintViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation needed a longer history than the state's depth budget covers.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hmalab
