#ifndef BERGMAN_ERRORS_HPP
#define BERGMAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bergman {

// Argument outside the mathematical domain of an operation.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation hit a pole (Gamma at a nonpositive integer, hypergeometric
// with nonpositive-integer denominator parameter, ...).
struct pole_error : domain_error {
  using domain_error::domain_error;
};

// The requested value is infinite (divergent series or integral).
struct divergence_error : domain_error {
  using domain_error::domain_error;
};

// An iterative scheme failed to reach its tolerance within its budget.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bergman

#endif
