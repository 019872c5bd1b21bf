#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inhabit/frontend.hpp"

namespace inhabit {

namespace {

enum class Tok { Ident, LParen, RParen, Colon, Arrow, DArrow, KwDef, KwGoal, KwFun, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '\'' || c == '.';
}

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    skip_trivia();
    SourcePos pos{line_, col_};
    if (at_end()) {
      current_ = Token{Tok::End, "", pos};
      return;
    }
    char c = text_[i_];
    if (c == '(') {
      bump();
      current_ = Token{Tok::LParen, "(", pos};
    } else if (c == ')') {
      bump();
      current_ = Token{Tok::RParen, ")", pos};
    } else if (c == ':') {
      bump();
      current_ = Token{Tok::Colon, ":", pos};
    } else if (c == '-' && i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
      bump();
      bump();
      current_ = Token{Tok::Arrow, "->", pos};
    } else if (c == '=' && i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
      bump();
      bump();
      current_ = Token{Tok::DArrow, "=>", pos};
    } else if (match_utf8("\xE2\x86\x92")) {  // →
      current_ = Token{Tok::Arrow, "->", pos};
    } else if (match_utf8("\xE2\x86\xA6")) {  // ↦
      current_ = Token{Tok::DArrow, "=>", pos};
    } else if (ident_start(c)) {
      std::size_t begin = i_;
      while (!at_end() && ident_char(text_[i_])) bump();
      std::string word(text_.substr(begin, i_ - begin));
      Tok kind = Tok::Ident;
      if (word == "def") kind = Tok::KwDef;
      else if (word == "goal") kind = Tok::KwGoal;
      else if (word == "fun") kind = Tok::KwFun;
      current_ = Token{kind, std::move(word), pos};
    } else {
      throw FrontendError(pos, std::string("unexpected character '") + c + "'");
    }
  }

  void skip_trivia() {
    for (;;) {
      while (!at_end() && (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\r' ||
                           text_[i_] == '\n'))
        bump();
      if (!at_end() && text_[i_] == '-' && i_ + 1 < text_.size() && text_[i_ + 1] == '-') {
        while (!at_end() && text_[i_] != '\n') bump();
        continue;
      }
      return;
    }
  }

  bool match_utf8(std::string_view bytes) {
    if (text_.substr(i_, bytes.size()) != bytes) return false;
    for (std::size_t k = 0; k < bytes.size(); ++k) bump();
    return true;
  }

  bool at_end() const { return i_ >= text_.size(); }

  void bump() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_{Tok::End, "", {1, 1}};
};

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Problem problem() {
    Problem p;
    std::set<std::string> names;
    bool have_goal = false;
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::KwDef) {
        lex_.next();
        auto [name, pos] = decl_name(names);
        p.constants.emplace_back(name, type());
      } else if (t.kind == Tok::KwGoal) {
        lex_.next();
        auto [name, pos] = decl_name(names);
        p.goal_name = name;
        p.goal = type();
        have_goal = true;
        expect(Tok::End, "expected end of file after the goal declaration");
        break;
      } else if (t.kind == Tok::End) {
        throw FrontendError(t.pos, "missing goal declaration");
      } else {
        throw FrontendError(t.pos, "expected 'def' or 'goal'");
      }
    }
    (void)have_goal;
    check_problem(p);
    return p;
  }

  SurfaceTerm term() {
    SurfaceTerm t = term_or_lambda();
    expect(Tok::End, "expected end of input after term");
    return t;
  }

private:
  std::pair<std::string, SourcePos> decl_name(std::set<std::string>& names) {
    Token t = expect(Tok::Ident, "expected a declaration name");
    if (t.text == "Type") throw FrontendError(t.pos, "'Type' is reserved");
    if (!names.insert(t.text).second)
      throw FrontendError(t.pos, "duplicate name '" + t.text + "'");
    expect(Tok::Colon, "expected ':' after declaration name");
    return {t.text, t.pos};
  }

  SurfaceType type() {
    SurfaceType result;
    while (at_binder()) {
      lex_.next();  // (
      Token name = expect(Tok::Ident, "expected a binder name");
      if (name.text == "Type") throw FrontendError(name.pos, "'Type' cannot be a binder name");
      expect(Tok::Colon, "expected ':' in binder");
      SurfaceType binder_type = type();
      expect(Tok::RParen, "expected ')' after binder type");
      expect(Tok::Arrow, "expected '->' after binder");
      result.binders.push_back(SurfaceBinder{name.text, name.pos, std::move(binder_type)});
    }
    result.output = output_app();
    if (lex_.peek().kind == Tok::Arrow)
      throw FrontendError(lex_.peek().pos,
                          "function types need a named binder: write '(x : T) -> ...'");
    return result;
  }

  // True when the upcoming tokens open a binder "(x :". A plain lookahead
  // over a copy of the lexer keeps the grammar LL(3).
  bool at_binder() {
    if (lex_.peek().kind != Tok::LParen) return false;
    Lexer probe = lex_;
    probe.next();
    if (probe.peek().kind != Tok::Ident) return false;
    probe.next();
    return probe.peek().kind == Tok::Colon;
  }

  // An application in type-output or lambda-body position. The head must be
  // an identifier; a parenthesized 0-binder type standing alone unwraps.
  SurfaceApp output_app() {
    SourcePos pos = lex_.peek().pos;
    std::vector<SurfaceTerm> atoms;
    while (at_atom()) atoms.push_back(atom());
    if (atoms.empty()) throw FrontendError(lex_.peek().pos, "expected a term");
    if (atoms.front().is_lam())
      throw FrontendError(pos, "a lambda cannot head an application");
    SurfaceApp app = std::move(std::get<SurfaceApp>(atoms.front().node));
    if (atoms.size() == 1) return app;
    if (!app.args.empty())
      throw FrontendError(pos, "application head must be a single identifier");
    for (std::size_t i = 1; i < atoms.size(); ++i) app.args.push_back(std::move(atoms[i]));
    return app;
  }

  bool at_atom() {
    Tok k = lex_.peek().kind;
    return k == Tok::Ident || k == Tok::KwFun || (k == Tok::LParen && !at_binder());
  }

  SurfaceTerm atom() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident) {
      Token id = lex_.next();
      return SurfaceTerm{SurfaceApp{id.text, id.pos, {}}};
    }
    if (t.kind == Tok::KwFun) return lambda();
    if (t.kind == Tok::LParen) {
      SourcePos pos = t.pos;
      Lexer probe = lex_;
      probe.next();
      if (probe.peek().kind == Tok::Ident) {
        Lexer probe2 = probe;
        probe2.next();
        if (probe2.peek().kind == Tok::Colon)
          throw FrontendError(pos, "function types cannot appear as application arguments");
      }
      lex_.next();  // (
      SurfaceTerm inner = term_or_lambda();
      expect(Tok::RParen, "expected ')'");
      return inner;
    }
    throw FrontendError(t.pos, "expected a term");
  }

  SurfaceTerm term_or_lambda() {
    if (lex_.peek().kind == Tok::KwFun) return lambda();
    return SurfaceTerm{output_app()};
  }

  SurfaceTerm lambda() {
    Token kw = expect(Tok::KwFun, "expected 'fun'");
    std::vector<std::string> binders;
    while (lex_.peek().kind == Tok::Ident) {
      Token id = lex_.next();
      if (id.text == "Type") throw FrontendError(id.pos, "'Type' cannot be a binder name");
      binders.push_back(id.text);
    }
    if (binders.empty())
      throw FrontendError(lex_.peek().pos, "expected at least one binder after 'fun'");
    expect(Tok::DArrow, "expected '=>' after lambda binders");
    SurfaceTerm body = term_or_lambda();
    // fun x => fun y => e is the same function as fun x y => e.
    if (body.is_lam()) {
      SurfaceLam& inner = std::get<SurfaceLam>(body.node);
      for (auto& b : inner.binders) binders.push_back(std::move(b));
      return SurfaceTerm{SurfaceLam{std::move(binders), kw.pos, std::move(inner.body)}};
    }
    return SurfaceTerm{
        SurfaceLam{std::move(binders), kw.pos, std::move(std::get<SurfaceApp>(body.node))}};
  }

  Token expect(Tok kind, const char* message) {
    Token t = lex_.next();
    if (t.kind != kind) throw FrontendError(t.pos, message);
    return t;
  }

  // Scope check: every head must resolve to a binder in scope, a constant
  // declared earlier, or Type.
  void check_problem(const Problem& p) {
    std::vector<std::string> globals{"Type"};
    for (const auto& [name, ty] : p.constants) {
      check_type(ty, globals);
      globals.push_back(name);
    }
    check_type(p.goal, globals);
  }

  static bool known(const std::vector<std::vector<std::string>>& scopes,
                    const std::vector<std::string>& globals, const std::string& name) {
    for (const auto& scope : scopes)
      if (std::find(scope.begin(), scope.end(), name) != scope.end()) return true;
    return std::find(globals.begin(), globals.end(), name) != globals.end();
  }

  void check_type(const SurfaceType& ty, const std::vector<std::string>& globals) {
    std::vector<std::vector<std::string>> scopes;
    check_type_open(ty, scopes, globals);
  }

  void check_type_open(const SurfaceType& ty, std::vector<std::vector<std::string>>& scopes,
                       const std::vector<std::string>& globals) {
    scopes.push_back({});
    for (const SurfaceBinder& b : ty.binders) {
      check_type_open(b.type, scopes, globals);
      scopes.back().push_back(b.name);
    }
    check_app(ty.output, scopes, globals);
    scopes.pop_back();
  }

  void check_app(const SurfaceApp& app, std::vector<std::vector<std::string>>& scopes,
                 const std::vector<std::string>& globals) {
    if (!known(scopes, globals, app.head))
      throw FrontendError(app.pos, "unbound identifier '" + app.head + "'");
    for (const SurfaceTerm& arg : app.args) {
      if (arg.is_lam()) {
        scopes.push_back(arg.lam().binders);
        check_app(arg.lam().body, scopes, globals);
        scopes.pop_back();
      } else {
        check_app(arg.app(), scopes, globals);
      }
    }
  }

  Lexer lex_;
};

}  // namespace

Problem parse_problem(std::string_view text) { return Parser(text).problem(); }

SurfaceTerm parse_term(std::string_view text) { return Parser(text).term(); }

bool surface_eq(const SurfaceTerm& a, const SurfaceTerm& b) {
  if (a.is_lam() != b.is_lam()) return false;
  if (a.is_lam()) {
    if (a.lam().binders != b.lam().binders) return false;
    return surface_eq(SurfaceTerm{a.lam().body}, SurfaceTerm{b.lam().body});
  }
  const SurfaceApp& x = a.app();
  const SurfaceApp& y = b.app();
  if (x.head != y.head || x.args.size() != y.args.size()) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!surface_eq(x.args[i], y.args[i])) return false;
  return true;
}

namespace {

void format_app(const SurfaceApp& app, std::ostringstream& out);

void format_arg(const SurfaceTerm& arg, std::ostringstream& out) {
  if (arg.is_lam()) {
    out << "(fun";
    for (const std::string& b : arg.lam().binders) out << ' ' << b;
    out << " => ";
    format_app(arg.lam().body, out);
    out << ')';
    return;
  }
  const SurfaceApp& app = arg.app();
  if (app.args.empty()) {
    out << app.head;
    return;
  }
  out << '(';
  format_app(app, out);
  out << ')';
}

void format_app(const SurfaceApp& app, std::ostringstream& out) {
  out << app.head;
  for (const SurfaceTerm& arg : app.args) {
    out << ' ';
    format_arg(arg, out);
  }
}

}  // namespace

std::string format_term(const SurfaceTerm& term) {
  std::ostringstream out;
  if (term.is_lam()) {
    out << "fun";
    for (const std::string& b : term.lam().binders) out << ' ' << b;
    out << " => ";
    format_app(term.lam().body, out);
  } else {
    format_app(term.app(), out);
  }
  return out.str();
}

}  // namespace inhabit
