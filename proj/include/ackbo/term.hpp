#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ackbo {

/// A function symbol. AC symbols are binary by construction.
struct Symbol {
  std::string name;
  std::size_t arity = 0;
  bool ac = false;

  Symbol() = default;
  Symbol(std::string n, std::size_t a, bool is_ac = false);

  bool operator==(const Symbol &) const = default;
  std::strong_ordering operator<=>(const Symbol &) const = default;
};

/// Raised when a term or signature is ill-formed.
class TermError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable first-order term: a variable or an application of a symbol.
/// Copies share structure; hash and size are cached at construction.
class Term {
public:
  static Term var(std::string name);
  static Term app(Symbol f, std::vector<Term> args = {});
  static Term constant(std::string name) { return app(Symbol(std::move(name), 0)); }

  bool is_var() const { return node_->is_var; }
  bool is_app() const { return !node_->is_var; }
  /// Variable name or root symbol name.
  const std::string &name() const { return node_->name; }
  /// Root symbol; undefined for variables.
  const Symbol &symbol() const { return node_->sym; }
  std::span<const Term> args() const { return node_->args; }
  const Term &arg(std::size_t i) const { return node_->args.at(i); }
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }
  bool is_ground() const { return node_->ground; }
  bool has_root(const Symbol &f) const { return is_app() && symbol() == f; }

  bool same_node(const Term &o) const { return node_ == o.node_; }
  bool operator==(const Term &o) const;

private:
  struct Node {
    bool is_var = false;
    std::string name;
    Symbol sym;
    std::vector<Term> args;
    std::size_t hash = 0;
    std::size_t size = 1;
    bool ground = true;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term &t) const noexcept { return t.hash(); }
};

/// Unordered collection of terms; order of elements carries no meaning.
using Multiset = std::vector<Term>;
using Substitution = std::map<std::string, Term>;

/// Fixed total order on terms: variables first (by name), then applications
/// by (name, arity, ac) and recursively by arguments.
std::strong_ordering term_compare(const Term &a, const Term &b);

struct TermLess {
  bool operator()(const Term &a, const Term &b) const { return term_compare(a, b) < 0; }
};

/// Finite signature with unique symbol names.
class Signature {
public:
  Signature() = default;
  explicit Signature(std::span<const Symbol> syms);

  /// Adds a symbol; re-adding an identical symbol is a no-op, a conflicting
  /// declaration throws TermError.
  void add(const Symbol &s);
  /// Adds every symbol occurring in t.
  void add_symbols_of(const Term &t);
  bool contains(std::string_view name) const;
  std::optional<Symbol> find(std::string_view name) const;
  const Symbol &at(std::string_view name) const;
  /// Symbols sorted by name.
  std::vector<Symbol> symbols() const;
  std::size_t size() const { return syms_.size(); }
  bool operator==(const Signature &) const = default;

private:
  std::map<std::string, Symbol, std::less<>> syms_;
};

std::size_t var_count(const Term &t, std::string_view x);
/// Occurrence count of every variable in t.
std::map<std::string, std::size_t> var_counts(const Term &t);
/// Var(t), sorted.
std::vector<std::string> variables(const Term &t);
/// |s|_x >= |t|_x for every variable x.
bool var_condition(const Term &s, const Term &t);

/// tf_f(t): maximal non-f-rooted subterms below nested f applications.
Multiset top_flatten(const Symbol &f, const Term &t);

/// Right comb f(t1, f(t2, ... f(tn-1, tn))). A single element is returned as is.
Term make_comb(const Symbol &f, std::span<const Term> elems);

/// Canonical representative of the =_AC class of t: AC subterms flattened,
/// arguments sorted by term_compare, rebuilt as right combs. Idempotent.
Term ac_canonical(const Term &t);
bool ac_equal(const Term &s, const Term &t);

/// Simultaneous replacement of variables. The result is not canonicalized.
Term substitute(const Term &t, const Substitution &sigma);

bool is_subterm(const Term &u, const Term &t);

/// M - N on multisets (syntactic element equality).
Multiset multiset_difference(std::span<const Term> m, std::span<const Term> n);
/// Syntactic multiset equality.
bool multiset_equal(std::span<const Term> m, std::span<const Term> n);

/// Infix rendering for symbols made of operator characters, prefix otherwise.
std::string to_string(const Term &t);
std::string to_string(std::span<const Term> ms);
bool is_operator_name(std::string_view name);

} // namespace ackbo
