#pragma once

#include <stdexcept>
#include <string>

namespace dpa {

// Physics-domain violation: invalid parameters or initial data.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation at a time where a closed form is singular (zero of mu0, caustic).
class SingularTimeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical integration produced a non-finite state.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dpa
