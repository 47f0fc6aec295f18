#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jnt {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape mismatch or out-of-bounds access: a view that escapes its storage,
/// operands whose dimensions do not conform, an index past the end.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A factorization hit a pivot (or diagonal) too small to proceed.
/// `column` reports which elimination column failed.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, std::size_t column)
        : Error(what), column_(column) {}
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Argument outside a routine's domain: a bracket without a sign change,
/// a Bessel function of the second kind at x <= 0, an unknown variant.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration: bad block sizes, unsupported unroll factor,
/// malformed JNT_BLOCK environment value.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Text that does not match the expected grammar. `position` is the
/// 0-based offset of the first offending character within the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Structurally invalid matrix data: a bad Matrix Market banner, entry
/// indices outside the declared shape, triplet arrays of unequal length.
class MalformedMatrixError : public Error {
public:
    using Error::Error;
};

/// An iterative method cannot continue (e.g. a search direction with
/// non-positive curvature, which means the operator is not SPD).
class BreakdownError : public Error {
public:
    using Error::Error;
};

/// A benchmark kernel disagreed with its reference implementation.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// Operating-system level I/O failure (file open, write, ...).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace jnt
