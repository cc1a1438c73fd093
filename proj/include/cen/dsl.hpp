#pragma once

// Textual network description language.
//
//   document := token*
//   token    := wirelist terminator
//   wirelist := digit{2,4}                       (each digit 1..9 is one wire)
//             | '[' int (',' int){1,3} ']'
//   terminator := '-' | '='                      ('=' also emits the mirror)
//
// Two endpoints make a link, three a 2-op, four a 3-op. Whitespace between
// tokens is ignored. Example: "18-27-36-45-24=13=12=34=24=234=45-".

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cen/core.hpp"

namespace cen::dsl {

inline constexpr int min_order = 2;
inline constexpr int max_order = 16;

struct Token {
  std::vector<int> endpoints; // as written
  bool mirrored = false;
  std::size_t offset = 0; // byte offset of the wirelist
  std::size_t length = 0; // including the terminator
};

struct Document {
  int order = 0;
  std::vector<Token> tokens;
};

/// Lexes and validates `text`. Throws ParseError (with byte offset) on bad
/// input and ContractViolation when `order` is outside 2..16.
Document tokenize(std::string_view text, int order);

/// Expands a document into a network; '=' places the mirror right after the
/// original unless the token is its own mirror.
Network expand(const Document& doc);

Network parse(std::string_view text, int order);

/// One '-'-terminated token; digit form up to order 9, bracket form above.
std::string serialize_token(const Element& e, int order);

std::string serialize(const Network& network);

} // namespace cen::dsl
