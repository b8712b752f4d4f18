//
// Copyright 2026 The mwpaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "mwpaug/mathexpr/parser.h"

#include <charconv>
#include <string>
#include <utility>

namespace mwpaug::mathexpr {
namespace {

constexpr std::string_view kSyntaxPrefix = "syntax-error at offset ";

enum class TokenKind {
  kNumber,
  kUnknown,
  kPlus,
  kMinus,
  kTimes,
  kDivide,
  kLParen,
  kRParen,
  kEquals,
  kEnd,
};

struct Token {
  TokenKind kind;
  size_t offset;
  double value = 0.0;
};

absl::Status SyntaxError(size_t offset, std::string_view what) {
  return absl::InvalidArgumentError(std::string(kSyntaxPrefix) +
                                    std::to_string(offset) + ": " +
                                    std::string(what));
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  absl::StatusOr<Token> Next() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
            src_[pos_] == '\r')) {
      ++pos_;
    }
    const size_t start = pos_;
    if (pos_ >= src_.size()) return Token{TokenKind::kEnd, start};
    const char c = src_[pos_];
    if (IsDigit(c)) return LexNumber();
    // U+00D7 MULTIPLICATION SIGN.
    if (static_cast<unsigned char>(c) == 0xC3 && pos_ + 1 < src_.size() &&
        static_cast<unsigned char>(src_[pos_ + 1]) == 0x97) {
      pos_ += 2;
      return Token{TokenKind::kTimes, start};
    }
    ++pos_;
    switch (c) {
      case 'X':
        return Token{TokenKind::kUnknown, start};
      case 'x':
      case '*':
        return Token{TokenKind::kTimes, start};
      case '/':
        return Token{TokenKind::kDivide, start};
      case '+':
        return Token{TokenKind::kPlus, start};
      case '-':
        return Token{TokenKind::kMinus, start};
      case '(':
        return Token{TokenKind::kLParen, start};
      case ')':
        return Token{TokenKind::kRParen, start};
      case '=':
        return Token{TokenKind::kEquals, start};
      case '%':
        return SyntaxError(start, "unsupported operator '%'");
      case '^':
        return SyntaxError(start, "unsupported operator '^'");
      default:
        return SyntaxError(start, std::string("unexpected character '") + c +
                                      "'");
    }
  }

 private:
  absl::StatusOr<Token> LexNumber() {
    const size_t start = pos_;
    while (pos_ < src_.size() && IsDigit(src_[pos_])) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      if (pos_ + 1 >= src_.size() || !IsDigit(src_[pos_ + 1])) {
        return SyntaxError(pos_ + 1, "expected digit after decimal point");
      }
      ++pos_;
      while (pos_ < src_.size() && IsDigit(src_[pos_])) ++pos_;
    }
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || ptr != src_.data() + pos_) {
      return SyntaxError(start, "malformed number");
    }
    return Token{TokenKind::kNumber, start, value};
  }

  std::string_view src_;
  size_t pos_ = 0;
};

// Recursive descent over a pre-lexed token list.
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  absl::StatusOr<Equation> ParseEquationTokens() {
    auto lhs = ParseExpr();
    if (!lhs.ok()) return lhs.status();
    if (Peek().kind != TokenKind::kEquals) {
      return SyntaxError(Peek().offset, "expected '='");
    }
    ++pos_;
    auto rhs = ParseExpr();
    if (!rhs.ok()) return rhs.status();
    if (Peek().kind != TokenKind::kEnd) {
      return SyntaxError(Peek().offset, "unexpected trailing input");
    }
    return Equation{*std::move(lhs), *std::move(rhs)};
  }

  absl::StatusOr<ExprPtr> ParseExpressionTokens() {
    auto e = ParseExpr();
    if (!e.ok()) return e.status();
    if (Peek().kind != TokenKind::kEnd) {
      return SyntaxError(Peek().offset, "unexpected trailing input");
    }
    return e;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }

  absl::StatusOr<ExprPtr> ParseExpr() {
    auto left = ParseTerm();
    if (!left.ok()) return left;
    ExprPtr acc = *std::move(left);
    while (Peek().kind == TokenKind::kPlus || Peek().kind == TokenKind::kMinus) {
      const BinaryOp op =
          Peek().kind == TokenKind::kPlus ? BinaryOp::kAdd : BinaryOp::kSub;
      ++pos_;
      auto right = ParseTerm();
      if (!right.ok()) return right;
      acc = Expr::Binary(op, std::move(acc), *std::move(right));
    }
    return acc;
  }

  absl::StatusOr<ExprPtr> ParseTerm() {
    auto left = ParseFactor();
    if (!left.ok()) return left;
    ExprPtr acc = *std::move(left);
    while (Peek().kind == TokenKind::kTimes ||
           Peek().kind == TokenKind::kDivide) {
      const BinaryOp op =
          Peek().kind == TokenKind::kTimes ? BinaryOp::kMul : BinaryOp::kDiv;
      ++pos_;
      auto right = ParseFactor();
      if (!right.ok()) return right;
      acc = Expr::Binary(op, std::move(acc), *std::move(right));
    }
    return acc;
  }

  absl::StatusOr<ExprPtr> ParseFactor() {
    bool negate = false;
    if (Peek().kind == TokenKind::kMinus) {
      negate = true;
      ++pos_;
    }
    auto base = ParseBase();
    if (!base.ok()) return base;
    if (negate) return Expr::Negate(*std::move(base));
    return base;
  }

  absl::StatusOr<ExprPtr> ParseBase() {
    const Token tok = Peek();
    switch (tok.kind) {
      case TokenKind::kNumber:
        ++pos_;
        return Expr::Number(tok.value);
      case TokenKind::kUnknown:
        ++pos_;
        return Expr::Unknown();
      case TokenKind::kLParen: {
        ++pos_;
        auto inner = ParseExpr();
        if (!inner.ok()) return inner;
        if (Peek().kind != TokenKind::kRParen) {
          return SyntaxError(Peek().offset, "expected ')'");
        }
        ++pos_;
        return inner;
      }
      case TokenKind::kEnd:
        return SyntaxError(tok.offset, "unexpected end of input");
      default:
        return SyntaxError(tok.offset, "expected number, 'X' or '('");
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

absl::StatusOr<std::vector<Token>> Tokenize(std::string_view src) {
  bool blank = true;
  for (char c : src) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
      blank = false;
      break;
    }
  }
  if (blank) return absl::InvalidArgumentError("empty-input");
  Lexer lexer(src);
  std::vector<Token> tokens;
  while (true) {
    auto tok = lexer.Next();
    if (!tok.ok()) return tok.status();
    tokens.push_back(*tok);
    if (tok->kind == TokenKind::kEnd) break;
  }
  return tokens;
}

}  // namespace

absl::StatusOr<Equation> ParseEquation(std::string_view src) {
  auto tokens = Tokenize(src);
  if (!tokens.ok()) return tokens.status();
  return Parser(*std::move(tokens)).ParseEquationTokens();
}

absl::StatusOr<ExprPtr> ParseExpression(std::string_view src) {
  auto tokens = Tokenize(src);
  if (!tokens.ok()) return tokens.status();
  return Parser(*std::move(tokens)).ParseExpressionTokens();
}

std::optional<size_t> SyntaxErrorOffset(const absl::Status& status) {
  const std::string message(status.message());
  if (message.rfind(kSyntaxPrefix, 0) != 0) return std::nullopt;
  size_t offset = 0;
  const char* begin = message.data() + kSyntaxPrefix.size();
  const auto [ptr, ec] =
      std::from_chars(begin, message.data() + message.size(), offset);
  if (ec != std::errc() || ptr == begin) return std::nullopt;
  return offset;
}

}  // namespace mwpaug::mathexpr
