#pragma once

#include <stdexcept>
#include <string>

namespace voacal {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// A coefficient extraction needed a lower-truncation bound that the
/// operand does not provide; the contributing index set would be infinite.
struct NotTruncated : Error {
    explicit NotTruncated(const std::string& what) : Error(what) {}
};

/// The requested expansion has a target coefficient whose contributing
/// index set is infinite (the ill-defined substitution of the Warning).
struct DivergentSubstitution : Error {
    explicit DivergentSubstitution(const std::string& what) : Error(what) {}
};

struct NotARoot : Error {
    explicit NotARoot(const std::string& what) : Error(what) {}
};

struct MalformedBase : Error {
    explicit MalformedBase(const std::string& what) : Error(what) {}
};

struct SectorMismatch : Error {
    explicit SectorMismatch(const std::string& what) : Error(what) {}
};

struct NotHomogeneous : Error {
    explicit NotHomogeneous(const std::string& what) : Error(what) {}
};

/// phi_apply produced a non-integer exponent; indicates an implementation bug.
struct FractionalLeak : Error {
    explicit FractionalLeak(const std::string& what) : Error(what) {}
};

struct IncompatibleSource : Error {
    explicit IncompatibleSource(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace voacal
