#pragma once

#include <stdexcept>
#include <string>

namespace ohcp {

/// Malformed input: bad simplex, dimension mismatch, invalid index.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text fixture that cannot be parsed (line number is part of the message).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search hit its column cap or node budget before reaching a decision.
class UndecidedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller broke an operation's precondition (e.g. witness extraction on a
/// submatrix with |det| <= 1).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ohcp
