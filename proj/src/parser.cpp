#include "alias_calc/parser.hpp"

#include <cctype>
#include <map>
#include <set>

namespace aliasing {

namespace {

enum class Tok { Ident, Number, Assign, Dot, Comma, Semi, LParen, RParen, Eof };

struct Token {
  Tok kind;
  std::string text;
  SourceLoc loc;
};

const std::set<std::string, std::less<>> kKeywords = {
    "skip", "forget", "create",  "cut",  "then",      "else",
    "end",  "loop",   "iterate", "call", "procedure", "Current"};

bool is_keyword(std::string_view s) { return kKeywords.count(s) > 0; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    SourceLoc loc{line, col};
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') advance();
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        advance();
      }
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), loc});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        advance();
      }
      out.push_back({Tok::Number, std::string(src.substr(start, i - start)), loc});
    } else if (c == ':' && i + 1 < src.size() && src[i + 1] == '=') {
      advance(2);
      out.push_back({Tok::Assign, ":=", loc});
    } else if (c == '.') {
      advance();
      out.push_back({Tok::Dot, ".", loc});
    } else if (c == ',') {
      advance();
      out.push_back({Tok::Comma, ",", loc});
    } else if (c == ';') {
      advance();
      out.push_back({Tok::Semi, ";", loc});
    } else if (c == '(') {
      advance();
      out.push_back({Tok::LParen, "(", loc});
    } else if (c == ')') {
      advance();
      out.push_back({Tok::RParen, ")", loc});
    } else if (c == '\'') {
      throw ParseError(loc, "negated references (x') cannot appear in source text");
    } else {
      throw ParseError(loc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::Eof, "", SourceLoc{line, col}});
  return out;
}

/// A path as written, before normalization.
struct RawPath {
  std::vector<std::string> parts;
  SourceLoc loc;

  bool mentions_current() const {
    for (const auto& p : parts) {
      if (p == "Current") return true;
    }
    return false;
  }
  PathExpr to_expr(std::size_t count) const {
    std::vector<Segment> segs;
    for (std::size_t k = 0; k < count; ++k) {
      if (parts[k] != "Current") segs.emplace_back(parts[k]);
    }
    return PathExpr(std::move(segs));
  }
  PathExpr to_expr() const { return to_expr(parts.size()); }
  std::string text() const {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) out += '.';
      out += parts[k];
    }
    return out;
  }
};

class Parser {
 public:
  Parser(std::vector<Token> toks, Level level)
      : toks_(std::move(toks)), level_(level) {}

  Program program() {
    Program prog;
    prog.level = level_;
    skip_separators();
    if (peek_keyword("procedure")) {
      if (level_ < Level::E1) {
        throw ParseError(peek().loc,
                         "procedure declarations require language level e1 or higher");
      }
      while (peek_keyword("procedure")) {
        prog.procedures.push_back(procedure());
        skip_separators();
      }
      if (peek().kind != Tok::Eof) {
        throw ParseError(peek().loc, "expected 'procedure' or end of input, found '" +
                                         peek().text + "'");
      }
    } else {
      Procedure main;
      main.name = "Main";
      main.loc = peek().loc;
      main.body = list();
      if (peek().kind != Tok::Eof) {
        throw ParseError(peek().loc, "unexpected '" + peek().text + "'");
      }
      prog.procedures.push_back(std::move(main));
      prog.implicit_main = true;
    }
    validate(prog);
    return prog;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool peek_keyword(std::string_view kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(peek().loc, std::string("expected ") + what + ", found " +
                                       describe(peek()));
    }
    next();
  }
  void expect_keyword(const char* kw) {
    if (!peek_keyword(kw)) {
      throw ParseError(peek().loc, std::string("expected '") + kw + "', found " +
                                       describe(peek()));
    }
    next();
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::Eof ? "end of input" : "'" + t.text + "'";
  }
  void skip_separators() {
    while (peek().kind == Tok::Semi) next();
  }

  std::string identifier(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::Ident || is_keyword(t.text)) {
      throw ParseError(t.loc, std::string("expected ") + what + ", found " +
                                  describe(t));
    }
    return next().text;
  }

  Procedure procedure() {
    Procedure proc;
    proc.loc = peek().loc;
    expect_keyword("procedure");
    proc.name = identifier("procedure name");
    if (peek().kind == Tok::LParen) {
      next();
      if (peek().kind != Tok::RParen) {
        while (true) {
          SourceLoc loc = peek().loc;
          std::string formal = identifier("formal argument name");
          for (const auto& f : proc.formals) {
            if (f == formal) {
              throw ParseError(loc, "duplicate formal argument '" + formal + "'");
            }
          }
          proc.formals.push_back(std::move(formal));
          if (peek().kind != Tok::Comma) break;
          next();
        }
      }
      expect(Tok::RParen, "')'");
    }
    proc.body = list();
    expect_keyword("end");
    return proc;
  }

  InstructionList list() {
    InstructionList out;
    while (true) {
      skip_separators();
      const Token& t = peek();
      if (t.kind == Tok::Eof) break;
      if (t.kind == Tok::Ident &&
          (t.text == "end" || t.text == "else" || t.text == "procedure")) {
        break;
      }
      out.push_back(instruction());
    }
    return out;
  }

  RawPath raw_path() {
    RawPath p;
    p.loc = peek().loc;
    auto part = [&] {
      const Token& t = peek();
      if (t.kind == Tok::Ident && (t.text == "Current" || !is_keyword(t.text))) {
        p.parts.push_back(next().text);
      } else {
        throw ParseError(t.loc, "expected an expression, found " + describe(t));
      }
    };
    part();
    while (peek().kind == Tok::Dot) {
      next();
      part();
    }
    return p;
  }

  void require_level(const RawPath& p, std::size_t count) const {
    if (level_ >= Level::E2) return;
    for (std::size_t k = 0; k < count; ++k) {
      if (p.parts[k] == "Current") {
        throw ParseError(p.loc, "'Current' requires language level e2");
      }
    }
    if (count > 1) {
      throw ParseError(p.loc, "dot expression '" + p.text() +
                                  "' requires language level e2");
    }
  }

  PathExpr expression() {
    RawPath p = raw_path();
    require_level(p, p.parts.size());
    return p.to_expr();
  }

  std::vector<PathExpr> actuals() {
    std::vector<PathExpr> out;
    if (peek().kind != Tok::LParen) return out;
    next();
    if (peek().kind != Tok::RParen) {
      while (true) {
        out.push_back(expression());
        if (peek().kind != Tok::Comma) break;
        next();
      }
    }
    expect(Tok::RParen, "')'");
    return out;
  }

  Instruction instruction() {
    const Token t = peek();
    if (t.kind != Tok::Ident) {
      throw ParseError(t.loc, "expected an instruction, found " + describe(t));
    }
    const std::string& kw = t.text;
    if (kw == "skip") {
      next();
      return Instruction(Skip{}, t.loc);
    }
    if (kw == "forget" || kw == "create") {
      next();
      std::string var = identifier("a variable");
      if (kw == "forget") return Instruction(Forget{var}, t.loc);
      return Instruction(Create{var}, t.loc);
    }
    if (kw == "cut") {
      next();
      PathExpr lhs = expression();
      expect(Tok::Comma, "','");
      PathExpr rhs = expression();
      return Instruction(Cut{lhs, rhs}, t.loc);
    }
    if (kw == "then") {
      next();
      Conditional c;
      c.then_branch = list();
      if (peek_keyword("else")) {
        next();
        c.else_branch = list();
      }
      expect_keyword("end");
      return Instruction(std::move(c), t.loc);
    }
    if (kw == "loop") {
      next();
      Loop l{list()};
      expect_keyword("end");
      return Instruction(std::move(l), t.loc);
    }
    if (kw == "iterate") {
      next();
      if (peek().kind != Tok::Number) {
        throw ParseError(peek().loc, "expected a repetition count, found " +
                                         describe(peek()));
      }
      Repeat r;
      r.count = std::stoul(next().text);
      r.body = list();
      expect_keyword("end");
      return Instruction(std::move(r), t.loc);
    }
    if (kw == "call") {
      next();
      return call(t.loc);
    }
    if (kw == "end" || kw == "else" || kw == "procedure") {
      throw ParseError(t.loc, "unexpected '" + kw + "'");
    }

    RawPath target = raw_path();
    if (peek().kind != Tok::Assign) {
      throw ParseError(peek().loc, "expected ':=' after '" + target.text() +
                                       "', found " + describe(peek()));
    }
    if (target.parts.size() > 1) {
      throw ParseError(
          target.loc,
          "qualified assignment '" + target.text() +
              " := ...' is not supported; translate it into a call to a setter "
              "procedure (e.g. 'call " +
              target.to_expr(target.parts.size() - 1).str() + ".set_" +
              target.parts.back() + " (v)')");
    }
    if (target.parts.front() == "Current") {
      throw ParseError(target.loc, "cannot assign to 'Current'");
    }
    next();
    PathExpr source = expression();
    return Instruction(Assign{target.parts.front(), source}, t.loc);
  }

  Instruction call(SourceLoc loc) {
    RawPath p = raw_path();
    if (p.parts.back() == "Current") {
      throw ParseError(p.loc, "expected a procedure name after 'call'");
    }
    if (p.parts.size() == 1) {
      if (level_ < Level::E1) {
        throw ParseError(loc, "'call' requires language level e1 or higher");
      }
      std::string proc = p.parts.front();
      return Instruction(UnqualifiedCall{proc, actuals()}, loc);
    }
    if (level_ < Level::E2) {
      throw ParseError(loc, "qualified call '" + p.text() +
                                "' requires language level e2");
    }
    std::string proc = p.parts.back();
    PathExpr target = p.to_expr(p.parts.size() - 1);
    return Instruction(QualifiedCall{target, proc, actuals()}, loc);
  }

  void validate(const Program& prog) const {
    std::map<std::string, const Procedure*> procs;
    for (const auto& proc : prog.procedures) {
      if (!procs.emplace(proc.name, &proc).second) {
        throw ParseError(proc.loc, "duplicate procedure '" + proc.name + "'");
      }
    }
    auto main = procs.find(prog.main);
    if (main == procs.end()) {
      throw ParseError(SourceLoc{1, 1}, "no procedure named '" + prog.main + "'");
    }
    if (!main->second->formals.empty()) {
      throw ParseError(main->second->loc,
                       "main procedure '" + prog.main + "' must not take arguments");
    }
    for (const auto& proc : prog.procedures) check_calls(proc.body, procs);
  }

  void check_call(const std::string& name, std::size_t arity, SourceLoc loc,
                  const std::map<std::string, const Procedure*>& procs) const {
    auto it = procs.find(name);
    if (it == procs.end()) {
      throw ParseError(loc, "call to undefined procedure '" + name + "'");
    }
    std::size_t expected = it->second->formals.size();
    if (expected != arity) {
      throw ParseError(loc, "procedure '" + name + "' expects " +
                                std::to_string(expected) + " argument" +
                                (expected == 1 ? "" : "s") + ", got " +
                                std::to_string(arity));
    }
  }

  void check_calls(const InstructionList& list,
                   const std::map<std::string, const Procedure*>& procs) const {
    for (const auto& instr : list) {
      if (auto* c = std::get_if<UnqualifiedCall>(&instr.node)) {
        check_call(c->proc, c->actuals.size(), instr.loc, procs);
      } else if (auto* q = std::get_if<QualifiedCall>(&instr.node)) {
        check_call(q->proc, q->actuals.size(), instr.loc, procs);
      } else if (auto* cond = std::get_if<Conditional>(&instr.node)) {
        check_calls(cond->then_branch, procs);
        check_calls(cond->else_branch, procs);
      } else if (auto* l = std::get_if<Loop>(&instr.node)) {
        check_calls(l->body, procs);
      } else if (auto* r = std::get_if<Repeat>(&instr.node)) {
        check_calls(r->body, procs);
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Level level_;
};

}  // namespace

Program parse(std::string_view text, Level level) {
  Parser parser(lex(text), level);
  return parser.program();
}

}  // namespace aliasing
