#include "dlkb/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>

namespace dlkb {
namespace {

enum class Tok { LParen, RParen, Symbol, Integer, DateLit, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
  long value = 0;   // Integer
  Date date = Date::begin_time();  // DateLit
};

bool is_delim(char c) {
  return c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c));
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') {
          ++line_;
          col_ = 1;
        } else {
          ++col_;
        }
        ++pos_;
      } else {
        break;
      }
    }
  }

  void advance() {
    skip_blank();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Tok::End;
      tok_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (c == '(') {
      tok_.kind = Tok::LParen;
      tok_.text = "(";
      ++pos_;
      ++col_;
      return;
    }
    if (c == ')') {
      tok_.kind = Tok::RParen;
      tok_.text = ")";
      ++pos_;
      ++col_;
      return;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delim(text_[pos_])) {
      ++pos_;
      ++col_;
    }
    tok_.text = std::string(text_.substr(start, pos_ - start));
    classify();
  }

  void classify() {
    const std::string& s = tok_.text;
    bool digits = !s.empty();
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        digits = false;
        break;
      }
    }
    if (digits) {
      tok_.kind = Tok::Integer;
      std::from_chars(s.data(), s.data() + s.size(), tok_.value);
      return;
    }
    // YYYY/MM/DD, all-numeric components.
    long parts[3];
    int n = 0;
    std::size_t i = 0;
    bool date_shape = std::isdigit(static_cast<unsigned char>(s.empty() ? 'x' : s[0]));
    while (date_shape && i < s.size() && n < 3) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i || j - i > 6) {
        date_shape = false;
        break;
      }
      long v = 0;
      std::from_chars(s.data() + i, s.data() + j, v);
      parts[n++] = v;
      i = j;
      if (i == s.size()) break;
      if (s[i] != '/') {
        date_shape = false;
        break;
      }
      ++i;
    }
    if (date_shape && n == 3 && i == s.size()) {
      auto d = Date::make(static_cast<int>(parts[0]), static_cast<int>(parts[1]),
                          static_cast<int>(parts[2]));
      if (!d) {
        throw ParseError(tok_.line, tok_.col, "invalid calendar date '" + s + "'");
      }
      tok_.kind = Tok::DateLit;
      tok_.date = *d;
      return;
    }
    tok_.kind = Tok::Symbol;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(t.line, t.col, msg);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Description parse_one_description() {
    Description d = description();
    expect_end();
    return d;
  }

  KbCommand parse_one_command() {
    KbCommand c = command();
    expect_end();
    return c;
  }

  std::vector<KbCommand> parse_commands() {
    std::vector<KbCommand> out;
    while (lex_.peek().kind != Tok::End) out.push_back(command());
    return out;
  }

 private:
  void expect_end() {
    if (lex_.peek().kind != Tok::End) {
      fail(lex_.peek(), "unexpected input after form");
    }
  }

  Token expect(Tok kind, const std::string& what) {
    Token t = lex_.next();
    if (t.kind != kind) fail(t, "expected " + what + ", got '" + t.text + "'");
    return t;
  }

  std::string identifier(const std::string& what) {
    Token t = lex_.next();
    if (t.kind == Tok::DateLit) return t.date.str();  // date individuals
    if (t.kind != Tok::Symbol && t.kind != Tok::Integer) {
      fail(t, "expected " + what + ", got '" + t.text + "'");
    }
    return t.text;
  }

  unsigned non_negative_integer(const std::string& what) {
    Token t = lex_.next();
    if (t.kind != Tok::Integer) {
      fail(t, "expected " + what + ", got '" + t.text + "'");
    }
    return static_cast<unsigned>(t.value);
  }

  Date date_literal() {
    Token t = lex_.next();
    if (t.kind != Tok::DateLit) {
      fail(t, "expected date literal YYYY/MM/DD, got '" + t.text + "'");
    }
    return t.date;
  }

  std::vector<std::string> chain() {
    expect(Tok::LParen, "'('");
    std::vector<std::string> out;
    while (lex_.peek().kind == Tok::Symbol) out.push_back(lex_.next().text);
    if (out.empty()) fail(lex_.peek(), "attribute chain must be non-empty");
    expect(Tok::RParen, "')'");
    return out;
  }

  Description description() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::Symbol:
        if (t.text == "THING") return Description::thing();
        if (t.text == "NOTHING") return Description::nothing();
        if (t.text == "ANY-DATE") return Description::any_date();
        return Description::name(t.text);
      case Tok::LParen:
        return compound(t);
      default:
        fail(t, "expected a concept description, got '" + t.text + "'");
    }
  }

  Description compound(const Token& open) {
    Token head = lex_.next();
    if (head.kind != Tok::Symbol) {
      fail(head, "expected a constructor keyword, got '" + head.text + "'");
    }
    const std::string& k = head.text;
    if (k == "and") {
      std::vector<Description> args;
      while (lex_.peek().kind != Tok::RParen && lex_.peek().kind != Tok::End) {
        args.push_back(description());
      }
      if (args.empty()) fail(head, "'and' needs at least one argument");
      expect(Tok::RParen, "')'");
      return Description::conj(std::move(args));
    }
    if (k == "all" || k == "some") {
      std::string role = identifier("a role identifier");
      Description c = description();
      expect(Tok::RParen, "')'");
      return k == "all" ? Description::all(std::move(role), std::move(c))
                        : Description::some(std::move(role), std::move(c));
    }
    if (k == "at-least" || k == "at-most") {
      unsigned n = non_negative_integer("a non-negative integer");
      std::string role = identifier("a role identifier");
      expect(Tok::RParen, "')'");
      return k == "at-least" ? Description::at_least(n, std::move(role))
                             : Description::at_most(n, std::move(role));
    }
    if (k == "fills") {
      std::string role = identifier("a role identifier");
      std::string filler = identifier("an individual identifier");
      expect(Tok::RParen, "')'");
      return Description::fills(std::move(role), std::move(filler));
    }
    if (k == "one-of") {
      std::vector<std::string> members;
      std::set<std::string> seen;
      while (lex_.peek().kind != Tok::RParen && lex_.peek().kind != Tok::End) {
        std::string m = identifier("an individual identifier");
        if (seen.insert(m).second) members.push_back(std::move(m));
      }
      if (members.empty()) fail(head, "'one-of' needs at least one member");
      expect(Tok::RParen, "')'");
      return Description::one_of(std::move(members));
    }
    if (k == "same-as") {
      std::vector<std::string> l = chain();
      std::vector<std::string> r = chain();
      expect(Tok::RParen, "')'");
      return Description::same_as(std::move(l), std::move(r));
    }
    if (k == "dateRange") {
      std::vector<DateInterval> pairs;
      while (lex_.peek().kind == Tok::LParen) {
        lex_.next();
        Date b = date_literal();
        Date e = date_literal();
        expect(Tok::RParen, "')'");
        pairs.push_back({b, e});
      }
      expect(Tok::RParen, "')'");
      return Description::date_range(std::move(pairs));
    }
    if (k == "period") {
      expect(Tok::LParen, "'('");
      long ml = non_negative_integer("a month 1..12");
      long mh = non_negative_integer("a month 1..12");
      expect(Tok::RParen, "')'");
      expect(Tok::LParen, "'('");
      long dl = non_negative_integer("a day 1..31");
      long dh = non_negative_integer("a day 1..31");
      expect(Tok::RParen, "')'");
      expect(Tok::RParen, "')'");
      if (ml < 1 || ml > 12 || mh < 1 || mh > 12) {
        fail(head, "period months must be in 1..12");
      }
      if (dl < 1 || dl > 31 || dh < 1 || dh > 31) {
        fail(head, "period days must be in 1..31");
      }
      return Description::period(static_cast<int>(ml), static_cast<int>(mh),
                                 static_cast<int>(dl), static_cast<int>(dh));
    }
    fail(open, "unknown constructor keyword '" + k + "'");
  }

  KbCommand command() {
    Token open = expect(Tok::LParen, "'('");
    Token head = lex_.next();
    if (head.kind != Tok::Symbol) {
      fail(head, "expected a command name, got '" + head.text + "'");
    }
    const std::string& k = head.text;
    KbCommand out = [&]() -> KbCommand {
      if (k == "declare-primitive-role") {
        return DeclarePrimitiveRole{identifier("a role name")};
      }
      if (k == "declare-primitive-attribute") {
        return DeclarePrimitiveAttribute{identifier("an attribute name")};
      }
      if (k == "declare-individual") {
        return DeclareIndividual{identifier("an individual name")};
      }
      if (k == "declare-primitive-concept") {
        std::string name = identifier("a concept name");
        return DeclarePrimitiveConcept{std::move(name), description()};
      }
      if (k == "declare-defined-concept") {
        std::string name = identifier("a concept name");
        return DeclareDefinedConcept{std::move(name), description()};
      }
      if (k == "assert-member") {
        std::string b = identifier("an individual");
        return AssertMember{std::move(b), description()};
      }
      if (k == "assert-fills") {
        std::string b = identifier("an individual");
        std::string p = identifier("a role");
        std::string e = identifier("an individual");
        return AssertFills{std::move(b), std::move(p), std::move(e)};
      }
      if (k == "assert-closed") {
        std::string b = identifier("an individual");
        std::string p = identifier("a role");
        return AssertClosed{std::move(b), std::move(p)};
      }
      if (k == "ask-subsumes?") {
        Description c = description();
        Description d = description();
        return AskSubsumes{std::move(c), std::move(d)};
      }
      if (k == "ask-ancestors") return AskAncestors{description()};
      if (k == "ask-is-incoherent?") return AskIsIncoherent{description()};
      if (k == "ask-member?") {
        std::string b = identifier("an individual");
        return AskMember{std::move(b), description()};
      }
      if (k == "ask-non-member?") {
        std::string b = identifier("an individual");
        return AskNonMember{std::move(b), description()};
      }
      if (k == "ask-for-fillers") {
        std::string b = identifier("an individual");
        std::string p = identifier("a role");
        return AskForFillers{std::move(b), std::move(p)};
      }
      if (k == "ask-closed?") {
        std::string b = identifier("an individual");
        std::string p = identifier("a role");
        return AskClosed{std::move(b), std::move(p)};
      }
      fail(head, "unknown command '" + k + "'");
    }();
    Token close = lex_.next();
    if (close.kind != Tok::RParen) {
      fail(close, "wrong arity for command '" + k + "'");
    }
    (void)open;
    return out;
  }

  Lexer lex_;
};

}  // namespace

Description parse_description(std::string_view text) {
  return Parser(text).parse_one_description();
}

KbCommand parse_command(std::string_view text) {
  return Parser(text).parse_one_command();
}

std::vector<KbCommand> parse_command_file(std::string_view text) {
  return Parser(text).parse_commands();
}

bool forms_balanced(std::string_view text) {
  int depth = 0;
  bool in_comment = false;
  bool any = false;
  for (char c : text) {
    if (in_comment) {
      if (c == '\n') in_comment = false;
      continue;
    }
    if (c == ';') {
      in_comment = true;
    } else if (c == '(') {
      ++depth;
      any = true;
    } else if (c == ')') {
      --depth;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      any = true;
    }
  }
  return any && depth <= 0;
}

}  // namespace dlkb
