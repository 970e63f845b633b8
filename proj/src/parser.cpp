#include "blamelogic/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace blamelogic {

ParseError::ParseError(std::size_t position, std::string expected, std::string found)
    : std::runtime_error("at offset " + std::to_string(position) + ": expected " + expected +
                         ", found " + found),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok {
  kEnd,
  kIdent,
  kTrue,
  kFalse,
  kNot,       // !
  kImplies,   // ->
  kIff,       // <->
  kAnd,       // &
  kOr,        // |
  kNec,       // N
  kPossible,  // <N>
  kBlame,     // B
  kLBrace,
  kRBrace,
  kComma,
  kLParen,
  kRParen,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (true) {
    while (i < in.size() && std::isspace(static_cast<unsigned char>(in[i]))) ++i;
    if (i == in.size()) {
      out.push_back({Tok::kEnd, i, {}});
      return out;
    }
    const std::size_t start = i;
    const char c = in[i];
    auto emit = [&](Tok kind, std::size_t len) {
      out.push_back({kind, start, in.substr(start, len)});
      i = start + len;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < in.size() && is_word_char(in[j])) ++j;
      const std::string_view word = in.substr(i, j - i);
      if (word == "N") emit(Tok::kNec, 1);
      else if (word == "B") emit(Tok::kBlame, 1);
      else if (word == "true") emit(Tok::kTrue, word.size());
      else if (word == "false") emit(Tok::kFalse, word.size());
      else if (is_identifier(word)) emit(Tok::kIdent, word.size());
      else throw ParseError(start, "identifier", "'" + std::string(word) + "'");
      continue;
    }
    switch (c) {
      case '!': emit(Tok::kNot, 1); continue;
      case '&': emit(Tok::kAnd, 1); continue;
      case '|': emit(Tok::kOr, 1); continue;
      case '{': emit(Tok::kLBrace, 1); continue;
      case '}': emit(Tok::kRBrace, 1); continue;
      case ',': emit(Tok::kComma, 1); continue;
      case '(': emit(Tok::kLParen, 1); continue;
      case ')': emit(Tok::kRParen, 1); continue;
      default: break;
    }
    if (in.substr(i, 2) == "->") { emit(Tok::kImplies, 2); continue; }
    if (in.substr(i, 3) == "<->") { emit(Tok::kIff, 3); continue; }
    if (in.substr(i, 3) == "<N>") { emit(Tok::kPossible, 3); continue; }
    throw ParseError(start, "token", "'" + std::string(1, c) + "'");
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().kind != Tok::kEnd) fail("end of input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw ParseError(t.pos, expected,
                     t.kind == Tok::kEnd ? "end of input" : "'" + std::string(t.text) + "'");
  }

  void expect(Tok kind, const char* what) {
    if (!accept(kind)) fail(what);
  }

  Formula parse_iff() {
    Formula lhs = parse_impl();
    if (accept(Tok::kIff)) {
      Formula rhs = parse_impl();
      if (peek().kind == Tok::kIff) fail("no further '<->' (it does not associate)");
      return Formula::iff(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_impl() {
    Formula lhs = parse_disj();
    if (accept(Tok::kImplies)) return Formula::implies(std::move(lhs), parse_impl());
    return lhs;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (accept(Tok::kOr)) f = Formula::disjunction(std::move(f), parse_conj());
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_unary();
    while (accept(Tok::kAnd)) f = Formula::conjunction(std::move(f), parse_unary());
    return f;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::kNot: advance(); return Formula::negation(parse_unary());
      case Tok::kNec: advance(); return Formula::necessity(parse_unary());
      case Tok::kPossible: advance(); return Formula::possibility(parse_unary());
      case Tok::kBlame: {
        advance();
        expect(Tok::kLBrace, "'{'");
        std::vector<AgentId> members;
        if (peek().kind != Tok::kRBrace) {
          do {
            // "true"/"false" are keywords only for atoms; as agents they are names.
            const Tok k = peek().kind;
            if (k != Tok::kIdent && k != Tok::kTrue && k != Tok::kFalse) fail("agent identifier");
            members.emplace_back(advance().text);
          } while (accept(Tok::kComma));
        }
        expect(Tok::kRBrace, "',' or '}'");
        return Formula::blame(Coalition(std::move(members)), parse_unary());
      }
      default: return parse_atom();
    }
  }

  Formula parse_atom() {
    switch (peek().kind) {
      case Tok::kTrue: advance(); return Formula::top();
      case Tok::kFalse: advance(); return Formula::bottom();
      case Tok::kIdent: return Formula::prop(std::string(advance().text));
      case Tok::kLParen: {
        advance();
        Formula f = parse_iff();
        expect(Tok::kRParen, "')'");
        return f;
      }
      default: fail("formula");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength; a subterm printed in a context demanding more than its
// own level is parenthesized.
enum Level : int { kIffLevel = 1, kImplLevel = 2, kOrLevel = 3, kAndLevel = 4, kUnaryLevel = 5 };

int level_of(const Formula& f) {
  switch (f.kind()) {
    case Kind::kIff: return kIffLevel;
    case Kind::kImplies: return kImplLevel;
    case Kind::kOr: return kOrLevel;
    case Kind::kAnd: return kAndLevel;
    default: return kUnaryLevel;
  }
}

void print_to(const Formula& f, int context, std::string& out) {
  const int own = level_of(f);
  const bool parens = own < context;
  if (parens) out += '(';
  auto binary = [&](const char* op, int left, int right) {
    print_to(f.lhs(), left, out);
    out += op;
    print_to(f.rhs(), right, out);
  };
  switch (f.kind()) {
    case Kind::kProp: out += f.name(); break;
    case Kind::kTop: out += "true"; break;
    case Kind::kBottom: out += "false"; break;
    case Kind::kNot:
      if (f.is_possibility()) {
        out += "<N> ";
        print_to(f.operand().operand().operand(), kUnaryLevel, out);
      } else {
        out += '!';
        print_to(f.operand(), kUnaryLevel, out);
      }
      break;
    case Kind::kNecessity:
      out += "N ";
      print_to(f.operand(), kUnaryLevel, out);
      break;
    case Kind::kBlame: {
      out += "B{";
      const auto& members = f.coalition().members();
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i > 0) out += ',';
        out += members[i];
      }
      out += "} ";
      print_to(f.operand(), kUnaryLevel, out);
      break;
    }
    case Kind::kAnd: binary(" & ", kAndLevel, kUnaryLevel); break;
    case Kind::kOr: binary(" | ", kOrLevel, kAndLevel); break;
    case Kind::kImplies: binary(" -> ", kOrLevel, kImplLevel); break;
    case Kind::kIff: binary(" <-> ", kImplLevel, kImplLevel); break;
  }
  if (parens) out += ')';
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Formula& f) {
  std::string out;
  print_to(f, kIffLevel, out);
  return out;
}

}  // namespace blamelogic
