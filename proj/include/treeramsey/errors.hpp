#pragma once

#include <stdexcept>
#include <string>

namespace treeramsey {

// Regular 2|kp violations, impossible multiplicities and the like.
struct parity_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Graph order would exceed the supported maximum.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// A construction's side conditions do not hold for the given parameters.
struct infeasible_error : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace treeramsey
