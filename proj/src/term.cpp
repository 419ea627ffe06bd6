#include "ackbo/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ackbo {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_operator_char(unsigned char c) {
  if (c >= 0x80)
    return true;
  switch (c) {
  case '+': case '*': case '&': case '|': case '^': case '~': case '@':
  case '$': case '%': case '<': case '>': case '=': case '.': case '/':
  case '\\': case '-': case '!': case '?': case ':':
    return true;
  default:
    return false;
  }
}

bool is_infix(const Term &t) {
  return t.is_app() && t.symbol().arity == 2 && is_operator_name(t.name());
}

void render(const Term &t, std::string &out) {
  if (t.is_var()) {
    out += t.name();
    return;
  }
  if (is_infix(t)) {
    for (std::size_t i = 0; i < 2; ++i) {
      if (i == 1) {
        out += ' ';
        out += t.name();
        out += ' ';
      }
      const Term &a = t.arg(i);
      if (is_infix(a)) {
        out += '(';
        render(a, out);
        out += ')';
      } else {
        render(a, out);
      }
    }
    return;
  }
  out += t.name();
  if (t.args().empty())
    return;
  out += '(';
  bool first = true;
  for (const Term &a : t.args()) {
    if (!first)
      out += ", ";
    first = false;
    render(a, out);
  }
  out += ')';
}

void collect_tf(const Symbol &f, const Term &t, Multiset &out) {
  if (t.has_root(f)) {
    collect_tf(f, t.arg(0), out);
    collect_tf(f, t.arg(1), out);
  } else {
    out.push_back(t);
  }
}

void count_vars(const Term &t, std::map<std::string, std::size_t> &out) {
  if (t.is_var()) {
    ++out[t.name()];
    return;
  }
  if (t.is_ground())
    return;
  for (const Term &a : t.args())
    count_vars(a, out);
}

} // namespace

Symbol::Symbol(std::string n, std::size_t a, bool is_ac) : name(std::move(n)), arity(a), ac(is_ac) {
  if (ac && arity != 2)
    throw TermError("AC symbol '" + name + "' must be binary");
}

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->hash = mix(0x51ed27, std::hash<std::string>{}(name));
  n->name = std::move(name);
  n->ground = false;
  return Term(std::move(n));
}

Term Term::app(Symbol f, std::vector<Term> args) {
  if (args.size() != f.arity)
    throw TermError("symbol '" + f.name + "' expects " + std::to_string(f.arity) + " arguments, got " +
                    std::to_string(args.size()));
  auto n = std::make_shared<Node>();
  std::size_t h = mix(std::hash<std::string>{}(f.name), f.arity * 2 + (f.ac ? 1 : 0));
  for (const Term &a : args) {
    h = mix(h, a.hash());
    n->size += a.size();
    n->ground = n->ground && a.is_ground();
  }
  n->hash = h;
  n->name = f.name;
  n->sym = std::move(f);
  n->args = std::move(args);
  return Term(std::move(n));
}

bool Term::operator==(const Term &o) const {
  if (node_ == o.node_)
    return true;
  if (hash() != o.hash() || size() != o.size() || is_var() != o.is_var())
    return false;
  if (is_var())
    return name() == o.name();
  if (!(symbol() == o.symbol()))
    return false;
  for (std::size_t i = 0; i < node_->args.size(); ++i)
    if (!(node_->args[i] == o.node_->args[i]))
      return false;
  return true;
}

std::strong_ordering term_compare(const Term &a, const Term &b) {
  if (a.same_node(b))
    return std::strong_ordering::equal;
  if (a.is_var() != b.is_var())
    return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_var())
    return a.name() <=> b.name();
  if (auto c = a.symbol() <=> b.symbol(); c != 0)
    return c;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (auto c = term_compare(a.arg(i), b.arg(i)); c != 0)
      return c;
  return std::strong_ordering::equal;
}

Signature::Signature(std::span<const Symbol> syms) {
  for (const Symbol &s : syms)
    add(s);
}

void Signature::add(const Symbol &s) {
  auto it = syms_.find(s.name);
  if (it == syms_.end()) {
    syms_.emplace(s.name, s);
    return;
  }
  if (!(it->second == s))
    throw TermError("conflicting declarations for symbol '" + s.name + "'");
}

void Signature::add_symbols_of(const Term &t) {
  if (t.is_var())
    return;
  add(t.symbol());
  for (const Term &a : t.args())
    add_symbols_of(a);
}

bool Signature::contains(std::string_view name) const { return syms_.find(name) != syms_.end(); }

std::optional<Symbol> Signature::find(std::string_view name) const {
  auto it = syms_.find(name);
  if (it == syms_.end())
    return std::nullopt;
  return it->second;
}

const Symbol &Signature::at(std::string_view name) const {
  auto it = syms_.find(name);
  if (it == syms_.end())
    throw TermError("undeclared symbol '" + std::string(name) + "'");
  return it->second;
}

std::vector<Symbol> Signature::symbols() const {
  std::vector<Symbol> out;
  out.reserve(syms_.size());
  for (const auto &[_, s] : syms_)
    out.push_back(s);
  return out;
}

std::size_t var_count(const Term &t, std::string_view x) {
  if (t.is_var())
    return t.name() == x ? 1 : 0;
  if (t.is_ground())
    return 0;
  std::size_t n = 0;
  for (const Term &a : t.args())
    n += var_count(a, x);
  return n;
}

std::map<std::string, std::size_t> var_counts(const Term &t) {
  std::map<std::string, std::size_t> out;
  count_vars(t, out);
  return out;
}

std::vector<std::string> variables(const Term &t) {
  std::vector<std::string> out;
  for (const auto &[x, _] : var_counts(t))
    out.push_back(x);
  return out;
}

bool var_condition(const Term &s, const Term &t) {
  if (t.is_ground())
    return true;
  auto cs = var_counts(s);
  for (const auto &[x, n] : var_counts(t)) {
    auto it = cs.find(x);
    if (it == cs.end() || it->second < n)
      return false;
  }
  return true;
}

Multiset top_flatten(const Symbol &f, const Term &t) {
  if (!f.ac)
    throw TermError("top-flattening requires an AC symbol, got '" + f.name + "'");
  Multiset out;
  collect_tf(f, t, out);
  return out;
}

Term make_comb(const Symbol &f, std::span<const Term> elems) {
  if (elems.empty())
    throw TermError("cannot build an empty '" + f.name + "' comb");
  Term acc = elems.back();
  for (std::size_t i = elems.size() - 1; i-- > 0;)
    acc = Term::app(f, {elems[i], acc});
  return acc;
}

Term ac_canonical(const Term &t) {
  if (t.is_var() || t.args().empty())
    return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term &a : t.args())
    args.push_back(ac_canonical(a));
  const Symbol &f = t.symbol();
  if (!f.ac)
    return Term::app(f, std::move(args));
  Multiset elems;
  for (const Term &a : args)
    collect_tf(f, a, elems);
  std::sort(elems.begin(), elems.end(), TermLess{});
  return make_comb(f, elems);
}

bool ac_equal(const Term &s, const Term &t) { return ac_canonical(s) == ac_canonical(t); }

Term substitute(const Term &t, const Substitution &sigma) {
  if (t.is_var()) {
    auto it = sigma.find(t.name());
    return it == sigma.end() ? t : it->second;
  }
  if (t.is_ground())
    return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term &a : t.args())
    args.push_back(substitute(a, sigma));
  return Term::app(t.symbol(), std::move(args));
}

bool is_subterm(const Term &u, const Term &t) {
  if (u == t)
    return true;
  if (u.size() >= t.size())
    return false;
  for (const Term &a : t.args())
    if (is_subterm(u, a))
      return true;
  return false;
}

Multiset multiset_difference(std::span<const Term> m, std::span<const Term> n) {
  Multiset out(m.begin(), m.end());
  for (const Term &x : n) {
    auto it = std::find(out.begin(), out.end(), x);
    if (it != out.end())
      out.erase(it);
  }
  return out;
}

bool multiset_equal(std::span<const Term> m, std::span<const Term> n) {
  if (m.size() != n.size())
    return false;
  Multiset a(m.begin(), m.end()), b(n.begin(), n.end());
  std::sort(a.begin(), a.end(), TermLess{});
  std::sort(b.begin(), b.end(), TermLess{});
  return std::equal(a.begin(), a.end(), b.begin());
}

bool is_operator_name(std::string_view name) {
  if (name.empty())
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) { return is_operator_char(static_cast<unsigned char>(c)); });
}

std::string to_string(const Term &t) {
  std::string out;
  render(t, out);
  return out;
}

std::string to_string(std::span<const Term> ms) {
  std::string out = "{";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i)
      out += ", ";
    render(ms[i], out);
  }
  out += '}';
  return out;
}

} // namespace ackbo
