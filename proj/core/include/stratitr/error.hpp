#pragma once

#include <stdexcept>

namespace stratitr {

/// An argument or record violates a documented precondition or invariant.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An evaluation point falls outside the region where the operation is defined.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Reading or writing an external file failed.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace stratitr
