#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace octoramsey {

/// Base class of every library error. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed term text. Carries the byte offset of the offending character.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A variable leaf was found where a ground (unit-only) term is required.
class NotGround : public Error {
public:
    using Error::Error;
};

/// An assignment lacks a binding for a variable occurring in the term.
class UnboundVariable : public Error {
public:
    explicit UnboundVariable(std::uint32_t index)
        : Error("unbound variable x" + std::to_string(index)), index_(index) {}
    std::uint32_t index() const noexcept { return index_; }

private:
    std::uint32_t index_;
};

/// Operation requires a term whose leaves are all variables.
class NotVariableTerm : public Error {
public:
    using Error::Error;
};

class EmptyIndexList : public Error {
public:
    using Error::Error;
};

class NonIncreasingIndices : public Error {
public:
    using Error::Error;
};

class NotOrderly : public Error {
public:
    using Error::Error;
};

/// distinguish() requires two distinct terms over the same variable string.
class NotSameSkeleton : public Error {
public:
    using Error::Error;
};

class EqualTerms : public Error {
public:
    using Error::Error;
};

/// Digit sequence violates the signed-digit range or the nonadjacency rule.
class InvalidDigits : public Error {
public:
    using Error::Error;
};

/// A configured size cap (leaf count, materializable index) was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// The three-term chain is not strictly increasing under the precedence order.
class PrecedenceViolated : public Error {
public:
    using Error::Error;
};

class MalformedTable : public Error {
public:
    using Error::Error;
};

class NotAGroup : public Error {
public:
    using Error::Error;
};

class NotMoufang : public Error {
public:
    using Error::Error;
};

/// Two bracketings of the same power disagreed; must never fire on a
/// genuine Moufang loop.
class BracketingDisagreement : public Error {
public:
    using Error::Error;
};

class NotMG2Shaped : public Error {
public:
    using Error::Error;
};

}  // namespace octoramsey
