#pragma once

#include <stdexcept>
#include <string>

namespace modcat {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MODCAT_DEFINE_ERROR(Name)                       \
    class Name : public Error {                         \
    public:                                             \
        using Error::Error;                             \
    }

MODCAT_DEFINE_ERROR(DivisionByZero);
MODCAT_DEFINE_ERROR(ConductorMismatch);
MODCAT_DEFINE_ERROR(NotSelfConjugate);
MODCAT_DEFINE_ERROR(NotSquare);
MODCAT_DEFINE_ERROR(InvalidData);
MODCAT_DEFINE_ERROR(InvalidSubcat);
MODCAT_DEFINE_ERROR(IndexOutOfRange);
MODCAT_DEFINE_ERROR(ParentMismatch);
MODCAT_DEFINE_ERROR(NotModular);
MODCAT_DEFINE_ERROR(NotUnitary);
MODCAT_DEFINE_ERROR(ZeroDimension);
MODCAT_DEFINE_ERROR(UnknownKey);
MODCAT_DEFINE_ERROR(BudgetExceeded);
MODCAT_DEFINE_ERROR(InvalidGroup);

// Raised when two routes that a theorem proves equivalent disagree; always a bug
// in data or code, never a property of the input.
MODCAT_DEFINE_ERROR(InternalInconsistency);
MODCAT_DEFINE_ERROR(SplitFailure);

#undef MODCAT_DEFINE_ERROR

} // namespace modcat
