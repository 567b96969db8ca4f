#include "mpst/parser.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace mpst {
namespace {

enum class Tok { Id, Zero, Arrow, Colon, DoubleColon, Dot, LBrace, RBrace, Semi, Comma, Bang,
                 Query, Bar, Eof };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, k = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::Id, std::string(src.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    auto single = [&](Tok t, std::size_t n) {
      out.push_back({t, std::string(src.substr(i, n)), l, k});
      advance(n);
    };
    switch (c) {
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          single(Tok::Arrow, 2);
          continue;
        }
        break;
      case ':':
        if (i + 1 < src.size() && src[i + 1] == ':')
          single(Tok::DoubleColon, 2);
        else
          single(Tok::Colon, 1);
        continue;
      case '0':
        if (i + 1 < src.size() && std::isalnum(static_cast<unsigned char>(src[i + 1]))) break;
        single(Tok::Zero, 1);
        continue;
      case '.': single(Tok::Dot, 1); continue;
      case '{': single(Tok::LBrace, 1); continue;
      case '}': single(Tok::RBrace, 1); continue;
      case ';': single(Tok::Semi, 1); continue;
      case ',': single(Tok::Comma, 1); continue;
      case '!': single(Tok::Bang, 1); continue;
      case '?': single(Tok::Query, 1); continue;
      case '|': single(Tok::Bar, 1); continue;
      default: break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", l, k);
  }
  out.push_back({Tok::Eof, "", line, col});
  return out;
}

const char* describe(Tok t) {
  switch (t) {
    case Tok::Id: return "identifier";
    case Tok::Zero: return "'0'";
    case Tok::Arrow: return "'->'";
    case Tok::Colon: return "':'";
    case Tok::DoubleColon: return "'::'";
    case Tok::Dot: return "'.'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Bang: return "'!'";
    case Tok::Query: return "'?'";
    case Tok::Bar: return "'|'";
    case Tok::Eof: return "end of input";
  }
  return "token";
}

bool is_keyword(const std::string& s) { return s == "end" || s == "rec"; }

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  GlobalType global_top() {
    GlobalType g = global({}, {});
    expect_eof();
    return g;
  }

  Process process_top() {
    Process p = process({}, {});
    expect_eof();
    return p;
  }

  Network network_top() {
    std::map<Participant, Process> bindings;
    do {
      const Token& name = peek();
      Participant p = ident("participant");
      expect(Tok::DoubleColon);
      Process proc = process({}, {});
      if (!bindings.emplace(p, proc).second)
        fail("participant '" + p + "' bound twice", name);
    } while (accept(Tok::Bar));
    expect_eof();
    return Network(std::move(bindings));
  }

  Trace trace_top() {
    Trace t;
    if (peek().kind == Tok::Eof) return t;
    do {
      t.push_back(communication());
    } while (accept(Tok::Dot));
    expect_eof();
    return t;
  }

  Communication communication_top() {
    Communication c = communication();
    expect_eof();
    return c;
  }

 private:
  using Scope = std::set<std::string>;

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.column);
  }

  bool accept(Tok t) {
    if (peek().kind != t) return false;
    next();
    return true;
  }

  const Token& expect(Tok t) {
    if (peek().kind != t)
      fail(std::string("expected ") + describe(t) + ", found " + describe(peek().kind), peek());
    return next();
  }

  void expect_eof() {
    if (peek().kind != Tok::Eof)
      fail(std::string("unexpected ") + describe(peek().kind) + " after end of term", peek());
  }

  std::string ident(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::Id) fail(std::string("expected ") + what + ", found " + describe(t.kind), t);
    if (is_keyword(t.text)) fail(std::string("keyword '") + t.text + "' used as " + what, t);
    return next().text;
  }

  Communication communication() {
    const Token& start = peek();
    Communication c;
    c.sender = ident("sender");
    if (accept(Tok::Arrow)) {
      c.receiver = ident("receiver");
      expect(Tok::Colon);
      c.label = ident("label");
    } else {
      c.receiver = ident("receiver");
      c.label = ident("label");
    }
    if (c.sender == c.receiver) fail("self-communication on participant '" + c.sender + "'", start);
    return c;
  }

  // `bound` holds every recursion variable in scope; `unguarded` those bound
  // since the last communication prefix.
  template <class Term>
  Term variable(const Token& t, const Scope& bound, const Scope& unguarded) {
    if (!bound.count(t.text)) fail("unbound recursion variable '" + t.text + "'", t);
    if (unguarded.count(t.text)) fail("unguarded recursion on variable '" + t.text + "'", t);
    return Term::var(t.text);
  }

  GlobalType global(const Scope& bound, const Scope& unguarded) {
    const Token& t = peek();
    if (t.kind != Tok::Id) fail(std::string("expected global type, found ") + describe(t.kind), t);
    if (t.text == "end") {
      next();
      return GlobalType::end();
    }
    if (t.text == "rec") {
      next();
      std::string x = ident("recursion variable");
      expect(Tok::Dot);
      Scope b = bound, u = unguarded;
      b.insert(x);
      u.insert(x);
      return GlobalType::rec(x, global(b, u));
    }
    if (peek(1).kind != Tok::Arrow) {
      next();
      return variable<GlobalType>(t, bound, unguarded);
    }
    Participant p = ident("sender");
    expect(Tok::Arrow);
    const Token& rt = peek();
    Participant q = ident("receiver");
    if (p == q) fail("self-communication on participant '" + p + "'", rt);

    std::vector<GlobalType::Branch> branches;
    auto branch = [&](Tok sep) {
      const Token& lt = peek();
      Label l = ident("label");
      for (const auto& b : branches)
        if (b.label == l) fail("duplicate label '" + l + "'", lt);
      GlobalType cont = accept(sep) ? global(bound, {}) : GlobalType::end();
      branches.push_back({l, cont});
    };
    if (accept(Tok::Colon)) {
      branch(Tok::Dot);
    } else {
      expect(Tok::LBrace);
      do {
        branch(Tok::Semi);
      } while (accept(Tok::Comma));
      expect(Tok::RBrace);
    }
    return GlobalType::choice(p, q, std::move(branches));
  }

  Process process(const Scope& bound, const Scope& unguarded) {
    const Token& t = peek();
    if (t.kind == Tok::Zero) {
      next();
      return Process::zero();
    }
    if (t.kind != Tok::Id) fail(std::string("expected process, found ") + describe(t.kind), t);
    if (t.text == "rec") {
      next();
      std::string x = ident("recursion variable");
      expect(Tok::Dot);
      Scope b = bound, u = unguarded;
      b.insert(x);
      u.insert(x);
      return Process::rec(x, process(b, u));
    }
    if (t.text == "end") fail("keyword 'end' is not a process (use '0')", t);
    const Tok action = peek(1).kind;
    if (action != Tok::Bang && action != Tok::Query) {
      next();
      return variable<Process>(t, bound, unguarded);
    }
    Participant partner = ident("partner");
    next();

    std::vector<Process::Branch> branches;
    auto branch = [&](Tok sep) {
      const Token& lt = peek();
      Label l = ident("label");
      for (const auto& b : branches)
        if (b.label == l) fail("duplicate label '" + l + "'", lt);
      Process cont = accept(sep) ? process(bound, {}) : Process::zero();
      branches.push_back({l, cont});
    };
    if (accept(Tok::LBrace)) {
      do {
        branch(Tok::Semi);
      } while (accept(Tok::Comma));
      expect(Tok::RBrace);
    } else {
      branch(Tok::Dot);
    }
    return action == Tok::Bang ? Process::out(partner, std::move(branches))
                               : Process::in(partner, std::move(branches));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

GlobalType parse_global(std::string_view text) { return Parser(text).global_top(); }
Process parse_process(std::string_view text) { return Parser(text).process_top(); }
Network parse_network(std::string_view text) { return Parser(text).network_top(); }
Trace parse_trace(std::string_view text) { return Parser(text).trace_top(); }
Communication parse_communication(std::string_view text) {
  return Parser(text).communication_top();
}

}  // namespace mpst
