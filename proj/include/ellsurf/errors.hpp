#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellsurf {

/// Malformed text input. `position` is the 0-based offset of the offending
/// character in the parsed string (or line number for line-oriented formats).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Mathematically invalid input: zero discriminant, odd twist sets,
/// inconsistent ramification profiles and the like.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A valuation triple that no Weierstrass model can produce.
class ClassificationError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace ellsurf
