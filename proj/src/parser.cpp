#include "wise/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace wise {

namespace {

enum class Tok {
  Ident,
  Number,
  KwSkip,
  KwFail,
  KwWhile,
  KwDo,
  KwOd,
  KwIf,
  KwThen,
  KwElse,
  KwFi,
  KwTrue,
  KwFalse,
  KwAnd,
  KwOr,
  KwNot,
  Assign,   // =
  EqEq,     // ==
  Le,       // <=
  Lt,       // <
  Ge,       // >=
  Gt,       // >
  Plus,
  Minus,
  Semi,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::optional<Tok> keyword(const std::string& word) {
  if (word == "skip") return Tok::KwSkip;
  if (word == "fail") return Tok::KwFail;
  if (word == "while") return Tok::KwWhile;
  if (word == "do") return Tok::KwDo;
  if (word == "od") return Tok::KwOd;
  if (word == "if") return Tok::KwIf;
  if (word == "then") return Tok::KwThen;
  if (word == "else") return Tok::KwElse;
  if (word == "fi") return Tok::KwFi;
  if (word == "true") return Tok::KwTrue;
  if (word == "false") return Tok::KwFalse;
  if (word == "and") return Tok::KwAnd;
  if (word == "or") return Tok::KwOr;
  if (word == "not") return Tok::KwNot;
  return std::nullopt;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tl = line;
    const int tc = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      advance(j - i);
      if (auto kw = keyword(word)) {
        tokens.push_back({*kw, std::move(word), tl, tc});
      } else {
        tokens.push_back({Tok::Ident, std::move(word), tl, tc});
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string digits(text.substr(i, j - i));
      advance(j - i);
      tokens.push_back({Tok::Number, std::move(digits), tl, tc});
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "==") {
      advance(2);
      tokens.push_back({Tok::EqEq, "==", tl, tc});
      continue;
    }
    if (two == "<=") {
      advance(2);
      tokens.push_back({Tok::Le, "<=", tl, tc});
      continue;
    }
    if (two == ">=") {
      advance(2);
      tokens.push_back({Tok::Ge, ">=", tl, tc});
      continue;
    }
    Tok kind;
    switch (c) {
      case '=': kind = Tok::Assign; break;
      case '<': kind = Tok::Lt; break;
      case '>': kind = Tok::Gt; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case ';': kind = Tok::Semi; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
    }
    advance(1);
    tokens.push_back({kind, std::string(1, c), tl, tc});
  }
  tokens.push_back({Tok::End, "", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  StmtPtr program() {
    StmtPtr s = stmt();
    expect(Tok::End, "end of input");
    return s;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at(Tok kind) const { return peek().kind == kind; }

  bool accept(Tok kind) {
    if (at(kind)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Token expect(Tok kind, const std::string& what) {
    if (!at(kind)) {
      throw ParseError(peek().line, peek().column,
                       "expected " + what + ", found '" + describe(peek()) + "'");
    }
    return next();
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : t.text;
  }

  [[noreturn]] void fail_here(const std::string& message) const {
    throw ParseError(peek().line, peek().column, message);
  }

  // stmt := simple (';' stmt)?   -- ';' is right-associative
  StmtPtr stmt() {
    StmtPtr first = simple();
    if (accept(Tok::Semi)) return mk_seq(std::move(first), stmt());
    return first;
  }

  StmtPtr simple() {
    if (accept(Tok::KwSkip)) return mk_skip();
    if (accept(Tok::KwFail)) return mk_fail();
    if (accept(Tok::KwWhile)) {
      BexprPtr cond = bexpr();
      expect(Tok::KwDo, "'do'");
      StmtPtr body = stmt();
      expect(Tok::KwOd, "'od'");
      return mk_while(std::move(cond), std::move(body));
    }
    if (accept(Tok::KwIf)) {
      BexprPtr cond = bexpr();
      expect(Tok::KwThen, "'then'");
      StmtPtr then_branch = stmt();
      expect(Tok::KwElse, "'else'");
      StmtPtr else_branch = stmt();
      expect(Tok::KwFi, "'fi'");
      return mk_if(std::move(cond), std::move(then_branch), std::move(else_branch));
    }
    if (at(Tok::Ident)) {
      std::string name = next().text;
      expect(Tok::Assign, "'='");
      return mk_assign(std::move(name), aexpr());
    }
    fail_here("expected a statement, found '" + describe(peek()) + "'");
  }

  // bexpr := band ('or' band)*   -- left-associative
  BexprPtr bexpr() {
    BexprPtr left = band();
    while (accept(Tok::KwOr)) left = disj(std::move(left), band());
    return left;
  }

  BexprPtr band() {
    BexprPtr left = bfactor();
    while (accept(Tok::KwAnd)) left = conj(std::move(left), bfactor());
    return left;
  }

  // A boolean factor is a comparison or a boolean primary. A '(' is
  // ambiguous between the two; we try the primary reading first and
  // backtrack if the parenthesized text is arithmetic.
  BexprPtr bfactor() {
    if (at(Tok::KwTrue) || at(Tok::KwFalse) || at(Tok::KwNot)) return bprimary();
    if (at(Tok::LParen)) {
      const std::size_t saved = pos_;
      try {
        ++pos_;
        BexprPtr inner = bexpr();
        expect(Tok::RParen, "')'");
        if (is_cmp(peek().kind) || at(Tok::Plus) || at(Tok::Minus)) {
          pos_ = saved;  // it was an arithmetic group after all
        } else {
          return inner;
        }
      } catch (const ParseError&) {
        pos_ = saved;
      }
    }
    return comparison();
  }

  BexprPtr bprimary() {
    if (accept(Tok::KwTrue)) return tt();
    if (accept(Tok::KwFalse)) return ff();
    if (accept(Tok::KwNot)) return neg(bprimary());
    if (accept(Tok::LParen)) {
      BexprPtr inner = bexpr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    fail_here("expected a boolean expression, found '" + describe(peek()) + "'");
  }

  static bool is_cmp(Tok kind) {
    return kind == Tok::EqEq || kind == Tok::Le || kind == Tok::Lt || kind == Tok::Ge ||
           kind == Tok::Gt;
  }

  BexprPtr comparison() {
    AexprPtr left = aexpr();
    if (!is_cmp(peek().kind)) fail_here("expected a comparison operator");
    CmpOp op;
    switch (next().kind) {
      case Tok::EqEq: op = CmpOp::Eq; break;
      case Tok::Le: op = CmpOp::Le; break;
      case Tok::Lt: op = CmpOp::Lt; break;
      case Tok::Ge: op = CmpOp::Ge; break;
      default: op = CmpOp::Gt; break;
    }
    AexprPtr right = aexpr();
    if (is_cmp(peek().kind)) fail_here("comparisons cannot be chained");
    return cmp(op, std::move(left), std::move(right));
  }

  // aexpr := aprimary (('+' | '-') aprimary)*   -- left-associative
  AexprPtr aexpr() {
    AexprPtr left = aprimary();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const bool is_add = next().kind == Tok::Plus;
      AexprPtr right = aprimary();
      left = is_add ? add(std::move(left), std::move(right))
                    : sub(std::move(left), std::move(right));
    }
    return left;
  }

  AexprPtr aprimary() {
    if (at(Tok::Number)) return lit(Int(next().text));
    if (at(Tok::Ident)) return var_ref(next().text);
    if (accept(Tok::Minus)) return sub(lit(0), aprimary());  // unary minus sugar
    if (accept(Tok::LParen)) {
      AexprPtr inner = aexpr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    fail_here("expected an arithmetic expression, found '" + describe(peek()) + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

StmtPtr parse_program(std::string_view text) {
  Parser parser(tokenize(text));
  return parser.program();
}

}  // namespace wise
