#pragma once

#include <stdexcept>
#include <string>

namespace qutritlab {

struct NonSquareError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadSubsystemError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadDimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ZeroSuccessProbabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDistillableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qutritlab
