#include "cen/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace cen::dsl {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string describe(char c) {
  if (std::isprint(static_cast<unsigned char>(c)))
    return std::string("'") + c + "'";
  return "byte " + std::to_string(static_cast<unsigned char>(c));
}

class Lexer {
public:
  Lexer(std::string_view text, int order) : text_(text), order_(order) {}

  Document run() {
    Document doc{order_, {}};
    skip_space();
    while (pos_ < text_.size()) {
      doc.tokens.push_back(token());
      skip_space();
    }
    return doc;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_]))
      ++pos_;
  }

  void endpoint(Token& tok, int wire, std::size_t at) {
    if (wire < 1 || wire > order_)
      throw ParseError(at, "wire " + std::to_string(wire) + " outside 1.." + std::to_string(order_));
    if (std::find(tok.endpoints.begin(), tok.endpoints.end(), wire) != tok.endpoints.end())
      throw ParseError(at, "wire " + std::to_string(wire) + " repeated within one element");
    tok.endpoints.push_back(wire);
  }

  void digits(Token& tok) {
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      endpoint(tok, text_[pos_] - '0', pos_);
      ++pos_;
    }
  }

  void bracketed(Token& tok) {
    ++pos_; // '['
    for (;;) {
      const std::size_t start = pos_;
      long value = 0;
      while (pos_ < text_.size() && is_digit(text_[pos_])) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > 1000)
          throw ParseError(start, "wire number too large");
        ++pos_;
      }
      if (pos_ == start) {
        if (pos_ >= text_.size())
          throw ParseError(pos_, "unterminated '['");
        throw ParseError(pos_, "expected a wire number, found " + describe(text_[pos_]));
      }
      endpoint(tok, static_cast<int>(value), start);
      if (pos_ >= text_.size())
        throw ParseError(pos_, "unterminated '['");
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (text_[pos_] == ']') {
        ++pos_;
        return;
      }
      throw ParseError(pos_, "expected ',' or ']', found " + describe(text_[pos_]));
    }
  }

  Token token() {
    Token tok;
    tok.offset = pos_;
    const char c = text_[pos_];
    if (is_digit(c))
      digits(tok);
    else if (c == '[')
      bracketed(tok);
    else
      throw ParseError(pos_, "unexpected character " + describe(c));

    if (tok.endpoints.size() < 2 || tok.endpoints.size() > 4)
      throw ParseError(tok.offset, "an element needs 2 to 4 wires, got " + std::to_string(tok.endpoints.size()));
    if (pos_ >= text_.size())
      throw ParseError(pos_, "wirelist at offset " + std::to_string(tok.offset) + " lacks a '-' or '=' terminator");
    const char t = text_[pos_];
    if (t != '-' && t != '=')
      throw ParseError(pos_, "expected '-' or '=', found " + describe(t));
    tok.mirrored = t == '=';
    ++pos_;
    tok.length = pos_ - tok.offset;
    return tok;
  }

  std::string_view text_;
  int order_;
  std::size_t pos_ = 0;
};

} // namespace

Document tokenize(std::string_view text, int order) {
  if (order < min_order || order > max_order)
    throw ContractViolation("DSL order must be in " + std::to_string(min_order) + ".." + std::to_string(max_order) +
                            ", got " + std::to_string(order));
  return Lexer(text, order).run();
}

Network expand(const Document& doc) {
  std::vector<Element> elements;
  for (const auto& tok : doc.tokens) {
    const Element e = Element::from_wires(tok.endpoints).normalized();
    elements.push_back(e);
    if (tok.mirrored) {
      const Element m = mirror(e, doc.order);
      if (m != e)
        elements.push_back(m);
    }
  }
  return Network(doc.order, std::move(elements));
}

Network parse(std::string_view text, int order) { return expand(tokenize(text, order)); }

std::string serialize_token(const Element& e, int order) {
  std::string s;
  if (order <= 9) {
    for (int w : e.wires())
      s += static_cast<char>('0' + w);
  } else {
    s += '[';
    bool first = true;
    for (int w : e.wires()) {
      if (!first)
        s += ',';
      s += std::to_string(w);
      first = false;
    }
    s += ']';
  }
  return s + '-';
}

std::string serialize(const Network& network) {
  require_valid(network);
  std::string out;
  for (const auto& e : network.elements())
    out += serialize_token(e, network.order());
  return out;
}

} // namespace cen::dsl
