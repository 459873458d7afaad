#ifndef GAQUOT_PARSE_HPP
#define GAQUOT_PARSE_HPP

// Recursive-descent reader for polynomial expressions.
//
//   expr    := term { ("+" | "-") term }
//   term    := unary { "*" unary }
//   unary   := ("+" | "-") unary | power
//   power   := primary [ "^" integer ]
//   primary := rational | identifier | "(" expr ")"
//   rational   := digits [ "/" digits ]
//   identifier := [A-Za-z_][A-Za-z0-9_]*
//
// "-w^2" reads as -(w^2). Whitespace is insignificant.

#include <cstddef>
#include <string>
#include <string_view>

#include "gaquot/poly.hpp"

namespace gaquot {

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }
    const std::string& message() const { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

enum class UnknownVariables {
    Strict,       // identifiers must already be in the table
    DeclareOnUse  // unknown identifiers are appended in order of first use
};

Poly parse(std::string_view text, const VarTable& vars,
           UnknownVariables policy = UnknownVariables::Strict);

// Declare-on-use over an initially empty table.
Poly parse(std::string_view text);

}  // namespace gaquot

#endif
