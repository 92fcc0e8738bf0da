#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wiener/families.hpp"

namespace wiener {

// Syntax error in a family expression; offset is the byte position in the
// input where parsing failed.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::invalid_argument("syntax error at byte " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar (whitespace-insensitive):
//   expr := "T(" ints ")"                      starlike
//         | "T[" int "," int ";" int "," int "]" broken unit arithmetic
//         | "BT^(" int ")(" ints ")"          bi-starlike BT
//         | "BS*(" ints ")"                   consecutive ints a..a+k
//         | "C3(" int ";" int "," int ";" int "," int ")"
//         | "C3(" int "," int "," int ")"
//         | "L(" expr ")"
// Throws ParseError on syntax errors and FamilyError on semantic ones.
FamilySpec parse_family(std::string_view text);

}  // namespace wiener
