#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "symlift/perm.hpp"

namespace symlift::permlang {

/// Syntax error with the byte offset it was detected at.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Text format for permutation expressions:
//
//   expr   := term {"*" term}
//   term   := factor ["^" (integer | "{" expr "}")]
//           | "[" expr "," expr "]"
//   factor := atom | "(" cycle ")" | "(" expr ")" | factor "'"
//   cycle  := nat nat {nat}          (whitespace-separated, all distinct)
//   atom   := name | name "[" nat "]"
//
// "^" with an integer is a power, "^{...}" is conjugation, "'" is inverse
// and "[x,y]" is the commutator. Factors apply left to right in a product.
// Power binds tighter than product; conjugation always uses braces, so it
// cannot be confused with an integer exponent. Cycle literals use spaces,
// not commas, which keeps them apart from commutator syntax. Atom names
// resolve against the registry passed in; "id" denotes the empty product.

perm::ExprPtr parse(std::string_view text, const perm::AtomRegistry& atoms);

/// Inverse of parse up to the grammar's canonical forms: any parse result
/// prints to text that re-parses to an equal tree. Multi-cycle FinPerm
/// nodes print as a product of their cycles (the parser only ever builds
/// single-cycle literals). Throws std::invalid_argument when the
/// expression uses an atom the registry does not know.
std::string print(const perm::Expr& e, const perm::AtomRegistry& atoms);

}  // namespace symlift::permlang
