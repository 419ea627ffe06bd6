#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ackbo/term.hpp"

namespace ackbo {

/// Raised for parameter sets that violate a precondition of the requested
/// operation (cyclic precedence, missing weight, inadmissible weights, ...).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Orders (f, g) name pairs; accepts std::string and std::string_view pairs alike.
struct NamePairLess {
  using is_transparent = void;
  template <class A, class B> bool operator()(const A &a, const B &b) const {
    const int c = std::string_view(a.first).compare(std::string_view(b.first));
    return c != 0 ? c < 0 : std::string_view(a.second) < std::string_view(b.second);
  }
};

/// Strict partial order on symbol names, kept transitively closed.
class Precedence {
public:
  Precedence() = default;

  /// Adds f > g and closes transitively. Throws ConfigError on a cycle.
  void add(const std::string &f, const std::string &g);
  /// Adds every consecutive pair of a chain f1 > f2 > ... > fn.
  void add_chain(std::span<const std::string> chain);
  static Precedence from_pairs(std::span<const std::pair<std::string, std::string>> pairs);

  bool greater(std::string_view f, std::string_view g) const;
  bool comparable(std::string_view f, std::string_view g) const {
    return greater(f, g) || greater(g, f);
  }
  /// True iff every two distinct names in syms are comparable.
  bool total_on(std::span<const std::string> syms) const;
  /// No symbol of syms lies below name.
  bool minimal(std::string_view name) const;
  /// Sorted list of all pairs (f, g) with f > g.
  const std::set<std::pair<std::string, std::string>, NamePairLess> &pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  bool operator==(const Precedence &) const = default;

private:
  std::set<std::pair<std::string, std::string>, NamePairLess> pairs_;
};

/// Weight function (w, w0) with optional subterm coefficients. Argument
/// positions of sc are 1-based; absent entries default to 1.
struct WeightFn {
  std::map<std::string, std::int64_t, std::less<>> w;
  std::int64_t w0 = 1;
  std::map<std::pair<std::string, std::size_t>, std::int64_t> sc;

  std::int64_t of(std::string_view f) const;
  std::int64_t coeff(const std::string &f, std::size_t pos) const;
  bool has_nontrivial_sc() const;
  bool operator==(const WeightFn &) const = default;
};

enum class Status { lex, mul };

struct OrderParams {
  Precedence precedence;
  WeightFn weights;
  /// Status of non-AC symbols for AC-RPO; absent symbols use lex.
  std::map<std::string, Status, std::less<>> status;

  Status status_of(std::string_view f) const;
  bool operator==(const OrderParams &) const = default;
};

/// w(t) = w0 on variables, w(f) + sum sc(f,i) * w(t_i) on applications.
std::int64_t weight(const Term &t, const WeightFn &wf);
/// Variable coefficient of x in t.
std::int64_t vc(std::string_view x, const Term &t, const WeightFn &wf);
/// vc(x, s) >= vc(x, t) for all variables x.
bool vc_condition(const Term &s, const Term &t, const WeightFn &wf);

/// w0 > 0, non-negative weights, constants weigh at least w0, and every
/// zero-weight unary symbol lies above all other symbols of sig.
bool admissible(const Precedence &p, const WeightFn &wf, const Signature &sig);
/// Explains why admissible() fails; empty when it holds.
std::string admissibility_violation(const Precedence &p, const WeightFn &wf, const Signature &sig);

} // namespace ackbo
