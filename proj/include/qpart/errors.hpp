#ifndef QPART_ERRORS_HPP
#define QPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpart {

// Base class for all domain errors raised by the library. The CLI maps these
// to exit code 1; anything else escaping is a bug.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

// Evaluation of a Laurent polynomial with negative exponents at 0.
struct EvalAtZero : Error {
    explicit EvalAtZero(const std::string& msg) : Error(msg) {}
};

// Closed-form conjugation expansion requested for a diagram with singleton
// blocks (the conjugate is identically zero there).
struct HasSingletons : Error {
    explicit HasSingletons(const std::string& msg) : Error(msg) {}
};

struct NotAVkmDiagram : Error {
    explicit NotAVkmDiagram(const std::string& msg) : Error(msg) {}
};

struct NotStandardDiagram : Error {
    explicit NotStandardDiagram(const std::string& msg) : Error(msg) {}
};

struct NuTooLarge : Error {
    explicit NuTooLarge(const std::string& msg) : Error(msg) {}
};

// A vector that must lie in the span of a module basis failed to reduce to
// zero residual. The modules are closed under the action, so this always
// indicates an implementation bug, never bad user input.
struct NotInSpan : Error {
    explicit NotInSpan(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace qpart

#endif // QPART_ERRORS_HPP
