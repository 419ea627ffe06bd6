#include "ackbo/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace ackbo {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line), column_(column) {}

namespace {

bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c == '#'; }

bool op_char(unsigned char c) { return c >= 0x80 || (c != 0 && std::string_view("+*&|^~@$%<>=./\\-!?:").find(c) != std::string_view::npos); }

enum class Tok { ident, op, lparen, rparen, comma, arrow, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  const Token &peek() {
    if (!ahead_)
      ahead_ = scan();
    return *ahead_;
  }

  Token next() {
    Token t = peek();
    ahead_.reset();
    return t;
  }

  [[noreturn]] void fail(const Token &at, const std::string &msg) const { throw ParseError(at.line, at.col, msg); }

  Token expect(Tok kind, const char *what) {
    Token t = next();
    if (t.kind != kind)
      fail(t, std::string("expected ") + what + describe(t));
    return t;
  }

  static std::string describe(const Token &t) {
    return t.kind == Tok::end ? ", found end of input" : ", found '" + t.text + "'";
  }

  // Skips raw text up to and including the parenthesis closing the current
  // section; used for COMMENT and STRATEGY.
  void skip_section() {
    ahead_.reset();
    int depth = 1;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      advance();
      if (c == '(')
        ++depth;
      else if (c == ')' && --depth == 0)
        return;
    }
    throw ParseError(line_, col_, "unterminated section");
  }

private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Token scan() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size())
      return t;
    const auto c = static_cast<unsigned char>(src_[pos_]);
    const std::size_t start = pos_;
    if (c == '(' || c == ')' || c == ',') {
      advance();
      t.kind = c == '(' ? Tok::lparen : c == ')' ? Tok::rparen : Tok::comma;
      t.text = std::string(1, static_cast<char>(c));
      return t;
    }
    if (ident_char(c)) {
      while (pos_ < src_.size() && ident_char(static_cast<unsigned char>(src_[pos_])))
        advance();
      t.kind = Tok::ident;
    } else if (op_char(c)) {
      while (pos_ < src_.size() && op_char(static_cast<unsigned char>(src_[pos_])))
        advance();
      t.kind = Tok::op;
    } else {
      throw ParseError(t.line, t.col, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    t.text = std::string(src_.substr(start, pos_ - start));
    if (t.kind == Tok::op && t.text == "->")
      t.kind = Tok::arrow;
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  std::optional<Token> ahead_;
};

class TermParser {
public:
  TermParser(Lexer &lex, const TermSyntax &syntax, Signature &sig, std::set<std::string> &vars)
      : lex_(lex), syn_(syntax), sig_(sig), vars_seen_(vars) {}

  Term term() {
    Term left = primary();
    while (lex_.peek().kind == Tok::op) {
      const Token op = lex_.next();
      Term right = primary();
      left = build(op, Symbol(op.text, 2, syn_.infix_ac || syn_.ac.count(op.text) > 0), {left, right});
    }
    return left;
  }

private:
  Term primary() {
    const Token t = lex_.next();
    if (t.kind == Tok::lparen) {
      Term inner = term();
      lex_.expect(Tok::rparen, "')'");
      return inner;
    }
    if (t.kind != Tok::ident && t.kind != Tok::op)
      lex_.fail(t, "expected a term" + Lexer::describe(t));
    if (lex_.peek().kind == Tok::lparen) {
      lex_.next();
      std::vector<Term> args;
      if (lex_.peek().kind != Tok::rparen) {
        args.push_back(term());
        while (lex_.peek().kind == Tok::comma) {
          lex_.next();
          args.push_back(term());
        }
      }
      lex_.expect(Tok::rparen, "')' or ','");
      const bool ac = syn_.ac.count(t.text) > 0 || (syn_.infix_ac && is_operator_name(t.text) && args.size() == 2);
      Symbol f(t.text, args.size(), ac);
      return build(t, std::move(f), std::move(args));
    }
    if (t.kind == Tok::op)
      lex_.fail(t, "operator '" + t.text + "' used without arguments");
    const bool var = syn_.variables.count(t.text) > 0 || (syn_.undeclared_vars && !syn_.symbols.count(t.text));
    if (var) {
      if (sig_.contains(t.text))
        lex_.fail(t, "'" + t.text + "' is used both as variable and as function symbol");
      vars_seen_.insert(t.text);
      return Term::var(t.text);
    }
    return build(t, Symbol(t.text, 0, syn_.ac.count(t.text) > 0), {});
  }

  Term build(const Token &at, Symbol f, std::vector<Term> args) {
    if (vars_seen_.count(f.name))
      lex_.fail(at, "'" + f.name + "' is used both as variable and as function symbol");
    try {
      if (f.ac && f.arity != 2)
        throw TermError("AC symbol '" + f.name + "' must be binary");
      sig_.add(f);
      return Term::app(std::move(f), std::move(args));
    } catch (const TermError &e) {
      lex_.fail(at, e.what());
    }
  }

  Lexer &lex_;
  const TermSyntax &syn_;
  Signature &sig_;
  std::set<std::string> &vars_seen_;
};

std::vector<std::string> split(std::string_view text, std::string_view seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (seps.find(c) != std::string_view::npos) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return std::string(s.substr(a, b - a));
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    return std::nullopt;
  return v;
}

[[noreturn]] void flag_error(const std::string &msg) { throw ParseError(1, 1, msg); }

} // namespace

Term parse_term(std::string_view text, const TermSyntax &syntax) {
  Lexer lex(text);
  Signature sig;
  std::set<std::string> vars;
  TermParser p(lex, syntax, sig, vars);
  Term t = p.term();
  if (lex.peek().kind != Tok::end)
    lex.fail(lex.peek(), "unexpected '" + lex.peek().text + "' after term");
  return t;
}

std::pair<Term, Term> parse_term_pair(std::string_view s, std::string_view t, const TermSyntax &syntax) {
  Signature sig;
  std::set<std::string> vars;
  auto one = [&](std::string_view text) {
    Lexer lex(text);
    TermParser p(lex, syntax, sig, vars);
    Term out = p.term();
    if (lex.peek().kind != Tok::end)
      lex.fail(lex.peek(), "unexpected '" + lex.peek().text + "' after term");
    return out;
  };
  Term left = one(s);
  return {std::move(left), one(t)};
}

Trs parse_trs(std::string_view text) {
  Lexer lex(text);
  TermSyntax syntax;
  Trs trs;
  bool seen_rules = false;
  while (lex.peek().kind != Tok::end) {
    lex.expect(Tok::lparen, "'('");
    const Token kw = lex.expect(Tok::ident, "a section keyword");
    if (kw.text == "VAR") {
      if (seen_rules)
        lex.fail(kw, "VAR section after RULES");
      while (lex.peek().kind == Tok::ident)
        syntax.variables.insert(lex.next().text);
      lex.expect(Tok::rparen, "')' closing VAR");
    } else if (kw.text == "THEORY") {
      if (seen_rules)
        lex.fail(kw, "THEORY section after RULES");
      while (lex.peek().kind == Tok::lparen) {
        lex.next();
        const Token kind = lex.expect(Tok::ident, "a theory name");
        if (kind.text != "AC")
          lex.fail(kind, "only AC theories are supported, found '" + kind.text + "'");
        while (lex.peek().kind == Tok::ident || lex.peek().kind == Tok::op)
          syntax.ac.insert(lex.next().text);
        lex.expect(Tok::rparen, "')' closing the theory");
      }
      lex.expect(Tok::rparen, "')' closing THEORY");
    } else if (kw.text == "RULES") {
      seen_rules = true;
      std::set<std::string> vars;
      TermParser p(lex, syntax, trs.signature, vars);
      while (lex.peek().kind != Tok::rparen) {
        if (lex.peek().kind == Tok::end)
          lex.fail(lex.peek(), "unterminated RULES section");
        const Token at = lex.peek();
        Term lhs = p.term();
        lex.expect(Tok::arrow, "'->'");
        Term rhs = p.term();
        if (lhs.is_var())
          lex.fail(at, "left-hand side is a variable");
        trs.rules.push_back({std::move(lhs), std::move(rhs)});
      }
      lex.next();
    } else if (kw.text == "COMMENT" || kw.text == "STRATEGY") {
      lex.skip_section();
    } else {
      lex.fail(kw, "unknown section '" + kw.text + "'");
    }
  }
  return trs;
}

std::string print_trs(const Trs &trs) {
  std::set<std::string> vars;
  for (const Rule &r : trs.rules) {
    for (auto &x : variables(r.lhs))
      vars.insert(x);
    for (auto &x : variables(r.rhs))
      vars.insert(x);
  }
  std::ostringstream out;
  if (!vars.empty()) {
    out << "(VAR";
    for (const auto &x : vars)
      out << ' ' << x;
    out << ")\n";
  }
  std::vector<std::string> ac;
  for (const Symbol &f : trs.signature.symbols())
    if (f.ac)
      ac.push_back(f.name);
  if (!ac.empty()) {
    out << "(THEORY (AC";
    for (const auto &f : ac)
      out << ' ' << f;
    out << "))\n";
  }
  out << "(RULES\n";
  for (const Rule &r : trs.rules)
    out << "  " << to_string(r.lhs) << " -> " << to_string(r.rhs) << "\n";
  out << ")\n";
  return out.str();
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula phi;
  std::optional<std::size_t> declared;
  std::vector<int> clause;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == 'c')
      continue;
    if (t[0] == '%')
      break;
    if (t[0] == 'p') {
      std::istringstream hs(t);
      std::string p, fmt;
      long long v = -1, c = -1;
      if (!(hs >> p >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0)
        throw ParseError(lineno, 1, "malformed header, expected 'p cnf <vars> <clauses>'");
      if (declared)
        throw ParseError(lineno, 1, "duplicate header");
      phi.num_vars = static_cast<int>(v);
      declared = static_cast<std::size_t>(c);
      continue;
    }
    if (!declared)
      throw ParseError(lineno, 1, "clause before the 'p cnf' header");
    std::istringstream ls(t);
    std::string tok;
    while (ls >> tok) {
      auto lit = to_int(tok);
      if (!lit)
        throw ParseError(lineno, 1, "expected an integer literal, found '" + tok + "'");
      if (*lit == 0) {
        phi.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      if (std::abs(*lit) > phi.num_vars)
        throw ParseError(lineno, 1, "literal " + tok + " exceeds the declared variable count");
      clause.push_back(static_cast<int>(*lit));
    }
  }
  if (!declared)
    throw ParseError(lineno + 1, 1, "missing 'p cnf' header");
  if (!clause.empty())
    throw ParseError(lineno + 1, 1, "last clause is not terminated by 0");
  if (phi.clauses.size() != *declared)
    throw ParseError(lineno + 1, 1,
                     "header announces " + std::to_string(*declared) + " clauses, found " +
                         std::to_string(phi.clauses.size()));
  return phi;
}

std::string print_dimacs(const CnfFormula &phi) {
  std::ostringstream out;
  out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
  for (const auto &clause : phi.clauses) {
    for (int lit : clause)
      out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

OrderParams parse_params(std::string_view text) {
  OrderParams params;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string &msg) -> void { throw ParseError(lineno, 1, msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = line.find(';'); c != std::string::npos)
      line.erase(c);
    std::istringstream ls(line);
    std::vector<std::string> words;
    for (std::string w; ls >> w;)
      words.push_back(w);
    if (words.empty())
      continue;
    const std::string &kw = words[0];
    auto num = [&](const std::string &s) {
      auto v = to_int(s);
      if (!v)
        fail("expected an integer, found '" + s + "'");
      return *v;
    };
    try {
      if (kw == "w0" && words.size() == 2) {
        params.weights.w0 = num(words[1]);
      } else if (kw == "w" && words.size() == 3) {
        params.weights.w[words[1]] = num(words[2]);
      } else if (kw == "prec" && words.size() >= 4 && words.size() % 2 == 0) {
        for (std::size_t i = 2; i < words.size(); i += 2) {
          if (words[i] != ">")
            fail("expected '>' in precedence chain");
          params.precedence.add(words[i - 1], words[i + 1]);
        }
      } else if (kw == "sc" && words.size() == 4) {
        const auto pos = num(words[2]);
        if (pos < 1)
          fail("argument positions start at 1");
        params.weights.sc[{words[1], static_cast<std::size_t>(pos)}] = num(words[3]);
      } else if (kw == "status" && words.size() == 3) {
        if (words[2] != "lex" && words[2] != "mul")
          fail("status must be lex or mul");
        params.status[words[1]] = words[2] == "lex" ? Status::lex : Status::mul;
      } else {
        fail("unrecognised directive '" + trim(line) + "'");
      }
    } catch (const ConfigError &e) {
      fail(e.what());
    }
  }
  return params;
}

std::string print_params(const OrderParams &params) {
  std::ostringstream out;
  out << "w0 " << params.weights.w0 << '\n';
  for (const auto &[f, w] : params.weights.w)
    out << "w " << f << ' ' << w << '\n';
  for (const auto &[key, v] : params.weights.sc)
    out << "sc " << key.first << ' ' << key.second << ' ' << v << '\n';
  for (const auto &[f, g] : params.precedence.pairs())
    out << "prec " << f << " > " << g << '\n';
  for (const auto &[f, s] : params.status)
    out << "status " << f << ' ' << (s == Status::lex ? "lex" : "mul") << '\n';
  return out.str();
}

void parse_weights_flag(std::string_view text, WeightFn &out) {
  for (const std::string &item : split(text, ",;")) {
    const std::string entry = trim(item);
    if (entry.empty())
      continue;
    const auto eq = entry.rfind('=');
    if (eq == std::string::npos || eq == 0)
      flag_error("weight entry '" + entry + "' is not of the form sym=int");
    const std::string name = trim(entry.substr(0, eq));
    auto v = to_int(trim(entry.substr(eq + 1)));
    if (!v)
      flag_error("weight entry '" + entry + "' has no integer value");
    if (name == "w0")
      out.w0 = *v;
    else
      out.w[name] = *v;
  }
}

void parse_prec_flag(std::string_view text, Precedence &out) {
  for (const std::string &chain : split(text, ",;")) {
    if (trim(chain).empty())
      continue;
    const auto names = split(chain, ">");
    std::vector<std::string> syms;
    for (const auto &n : names) {
      const std::string s = trim(n);
      if (s.empty())
        flag_error("empty symbol in precedence chain '" + chain + "'");
      syms.push_back(s);
    }
    if (syms.size() < 2)
      flag_error("precedence chain '" + chain + "' needs at least two symbols");
    try {
      out.add_chain(syms);
    } catch (const ConfigError &e) {
      flag_error(e.what());
    }
  }
}

void parse_sc_flag(std::string_view text, WeightFn &out) {
  for (const std::string &item : split(text, ",;")) {
    const std::string entry = trim(item);
    if (entry.empty())
      continue;
    const auto colon = entry.rfind(':'), eq = entry.rfind('=');
    if (colon == std::string::npos || eq == std::string::npos || colon == 0 || eq < colon)
      flag_error("coefficient entry '" + entry + "' is not of the form sym:pos=int");
    auto pos = to_int(trim(entry.substr(colon + 1, eq - colon - 1)));
    auto v = to_int(trim(entry.substr(eq + 1)));
    if (!pos || *pos < 1 || !v)
      flag_error("coefficient entry '" + entry + "' is not of the form sym:pos=int");
    out.sc[{trim(entry.substr(0, colon)), static_cast<std::size_t>(*pos)}] = *v;
  }
}

void parse_status_flag(std::string_view text, OrderParams &out) {
  for (const std::string &item : split(text, ",;")) {
    const std::string entry = trim(item);
    if (entry.empty())
      continue;
    const auto eq = entry.rfind('=');
    const std::string value = eq == std::string::npos ? "" : trim(entry.substr(eq + 1));
    if (eq == std::string::npos || eq == 0 || (value != "lex" && value != "mul"))
      flag_error("status entry '" + entry + "' is not of the form sym=lex|mul");
    out.status[trim(entry.substr(0, eq))] = value == "lex" ? Status::lex : Status::mul;
  }
}

} // namespace ackbo
