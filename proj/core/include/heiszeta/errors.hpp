#pragma once

#include <stdexcept>
#include <string>

namespace heiszeta {

// Error taxonomy. The CLI maps these onto process exit codes:
// InputError -> 2, GuardError -> 3. A mathematical disagreement is not an
// exception; commands report it and exit 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};
struct GuardError : Error {
    using Error::Error;
};

struct InvalidD : InputError {
    using InputError::InputError;
};
struct NotSquareFree : InputError {
    using InputError::InputError;
};
struct NotPrime : InputError {
    using InputError::InputError;
};
struct ModulusMismatch : InputError {
    using InputError::InputError;
};
struct ShapeMismatch : InputError {
    using InputError::InputError;
};
struct InvalidLabel : InputError {
    using InputError::InputError;
};
struct NotPowerSeries : InputError {
    using InputError::InputError;
};
struct NoCleanFunctionalEquation : Error {
    using Error::Error;
};

struct TooLarge : GuardError {
    using GuardError::GuardError;
};
struct GroupTooLarge : GuardError {
    using GuardError::GuardError;
};
struct ClassCountTooLarge : GuardError {
    using GuardError::GuardError;
};
struct NoSuitableFieldChar : Error {
    using Error::Error;
};

}  // namespace heiszeta
