#ifndef JSRLAB_ERRORS_HPP
#define JSRLAB_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jsrlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical routine (eigensolver, SVD) failed to converge.
class ComputationError : public Error {
public:
    using Error::Error;
};

/// Cholesky pivot failure; `pivot_index` names the first offending pivot.
class NotPositiveDefiniteError : public Error {
public:
    NotPositiveDefiniteError(const std::string& msg, int pivot_index)
        : Error(msg), pivot_index(pivot_index) {}
    int pivot_index;
};

/// Intermediate values left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Input violates an operation precondition (domain, shape, degeneracy).
class DomainError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class MalformedWordError : public Error {
public:
    using Error::Error;
};

class SingularTransformError : public Error {
public:
    using Error::Error;
};

/// Enumeration work would exceed (or exceeded) the multiplication budget.
/// When thrown mid-scan the best value/witness seen so far is attached.
class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& msg,
                                 std::uint64_t requested = 0,
                                 std::uint64_t budget = 0)
        : Error(msg), requested(requested), budget(budget) {}
    std::uint64_t requested;
    std::uint64_t budget;
    bool has_partial = false;
    double partial_value = 0.0;
};

/// A reducibility certificate no longer matches the family it is applied to.
class StaleCertificateError : public Error {
public:
    using Error::Error;
};

/// Input file does not parse or does not satisfy the schema.
class FamilyFormatError : public Error {
public:
    FamilyFormatError(const std::string& msg, int line = -1, int column = -1)
        : Error(msg), line(line), column(column) {}
    int line;
    int column;
};

}  // namespace jsrlab

#endif  // JSRLAB_ERRORS_HPP
