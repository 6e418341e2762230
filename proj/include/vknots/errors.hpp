#pragma once

#include <stdexcept>
#include <string>

namespace vknots {

// Raised when textual input (Gauss codes, move lines, scripts) cannot be
// parsed or describes a structurally invalid diagram.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a move is applied at a site where its pattern does not hold.
class MoveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace vknots
