#include "wiener/family_parser.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace wiener {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    // Tokens are matched character by character so that "BT ^ (" also works.
    std::size_t p = pos_;
    for (char c : token) {
      while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
      if (p >= text_.size() || text_[p] != c) return false;
      ++p;
    }
    pos_ = p;
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  Arm integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a non-negative integer");
    }
    Arm value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<Arm>::max() - digit) / 10) {
        pos_ = start;
        fail("integer too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  std::vector<Arm> integer_list() {
    std::vector<Arm> xs{integer()};
    while (accept(",")) xs.push_back(integer());
    return xs;
  }

  FamilySpec expr() {
    skip_ws();
    if (accept("T(")) {
      std::vector<Arm> arms = integer_list();
      expect(")");
      return FamilySpec(Starlike{std::move(arms)});
    }
    if (accept("T[")) {
      BrokenUnitArithmetic b;
      b.first = integer();
      expect(",");
      b.last_before_gap = integer();
      expect(";");
      b.first_after_gap = integer();
      expect(",");
      b.last = integer();
      expect("]");
      return FamilySpec(b);
    }
    if (accept("BT^(")) {
      const Arm shoulder = integer();
      expect(")");
      expect("(");
      std::vector<Arm> arms = integer_list();
      expect(")");
      return FamilySpec(BiStarlikeBT{shoulder, std::move(arms)});
    }
    if (accept("BS*(")) {
      std::vector<Arm> xs = integer_list();
      expect(")");
      for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] != xs[i - 1] + 1) {
          throw FamilyError("BS*(...) requires consecutive integers a, a+1, ..., a+k");
        }
      }
      return FamilySpec(BiStarlikeBSStar{xs.front(), static_cast<Arm>(xs.size()) - 1});
    }
    if (accept("C3(")) {
      const Arm first = integer();
      if (accept(";")) {
        TriangleFiveArm t;
        t.k1 = first;
        t.k2 = integer();
        expect(",");
        t.k3 = integer();
        expect(";");
        t.k4 = integer();
        expect(",");
        t.k5 = integer();
        expect(")");
        return FamilySpec(t);
      }
      expect(",");
      TriangleThreeArm t;
      t.k1 = first;
      t.k2 = integer();
      expect(",");
      t.k3 = integer();
      expect(")");
      return FamilySpec(t);
    }
    if (accept("L(")) {
      FamilySpec inner = expr();
      expect(")");
      return line_of(std::move(inner));
    }
    fail("expected one of T( T[ BT^( BS*( C3( L(");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family(std::string_view text) { return Parser(text).parse(); }

}  // namespace wiener
