#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "blamelogic/formula.hpp"

namespace blamelogic {

// Concrete syntax, loosest to tightest binding:
//
//   formula := iff
//   iff     := impl ("<->" impl)?             non-associative
//   impl    := disj ("->" impl)?              right-associative
//   disj    := conj ("|" conj)*               left-associative
//   conj    := unary ("&" unary)*             left-associative
//   unary   := "!" unary | "N" unary | "<N>" unary | "B" "{" idlist? "}" unary | atom
//   atom    := "true" | "false" | ident | "(" formula ")"
//
// "<N> f" is read as !N!f.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found);

  // Byte offset into the input; equals the input length at end of input.
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

Formula parse(std::string_view text);

// Canonical text with the fewest parentheses the grammar allows.
std::string print(const Formula& f);

}  // namespace blamelogic
