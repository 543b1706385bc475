#pragma once

#include <stdexcept>
#include <string>

namespace msr {

/// Bad user-supplied parameters (code parameters, CLI flags, budgets).
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Enumeration budget refused (the run would exceed --max-subsets).
class BudgetError : public ParamError {
public:
    using ParamError::ParamError;
};

/// Field cannot support the requested code (too small, bad polynomial).
class FieldError : public ParamError {
public:
    using ParamError::ParamError;
};

/// Corrupt or inconsistent input data: bad shard headers, unsolvable
/// reconstruction systems, malformed spec files, failed fetches.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A certification failed: no MDS coefficient found, repair mismatch.
class VerifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant was violated; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace msr
