#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ackbo/params.hpp"
#include "ackbo/term.hpp"

namespace ackbo {

/// The AC-compatible orders implemented by Comparator.
///
///  - s           Steinbach's KBO (AC symbols must be minimal)
///  - kv_ground   Korovin-Voronkov KBO on ground terms
///  - kv          its non-ground extension (not closed under contexts)
///  - kv_prime    the monotone repair of kv using the >=kv' preorder
///  - ackbo       AC-KBO
///  - ackbo_sc    AC-KBO with subterm coefficients
///  - acrpo       AC-RPO phrased with restricted multisets
///  - acrpo_prime AC-RPO with the #-polynomial case (total precedences)
enum class OrderId { s, kv_ground, kv, kv_prime, ackbo, ackbo_sc, acrpo, acrpo_prime };

std::string_view to_string(OrderId id);
std::optional<OrderId> parse_order_id(std::string_view name);
/// True for the weight-based orders.
bool is_kbo_family(OrderId id);

enum class Relation { gt, ac_equal, none };
std::string_view to_string(Relation r);

struct TraceStep {
  Term lhs;
  Term rhs;
  std::string label;
};

/// Result of a comparison. The trace is non-empty iff the relation is GT;
/// its first step is the top-level case, later steps justify the sub-comparisons.
struct Verdict {
  Relation relation = Relation::none;
  std::vector<TraceStep> trace;

  bool gt() const { return relation == Relation::gt; }
};

/// Throws ConfigError unless params satisfy the preconditions of id over sig.
void validate(OrderId id, const OrderParams &params, const Signature &sig);

/// Compares terms under fixed parameters. Results of sub-comparisons are
/// memoized across calls, so one instance should be reused for many pairs
/// sharing parameters. Not thread-safe; use one instance per thread.
class Comparator {
public:
  /// Validates params over sig; throws ConfigError on violation.
  Comparator(OrderId id, OrderParams params, Signature sig);
  ~Comparator();
  Comparator(Comparator &&) noexcept;
  Comparator &operator=(Comparator &&) noexcept;

  Verdict compare(const Term &s, const Term &t);
  /// compare(s, t).gt() without building a trace.
  bool greater(const Term &s, const Term &t);

  OrderId id() const;
  const OrderParams &params() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot comparison over the signature of s and t.
Verdict compare(OrderId id, const OrderParams &params, const Term &s, const Term &t);

/// s =_{w,root} t: equal variable counts, equal weight, equal root.
bool wroot_eq(const OrderParams &params, const Term &s, const Term &t);
/// s >_{w,root} t: variable condition and heavier, or equally heavy with a
/// greater root symbol. A variable root never compares.
bool wroot_gt(const OrderParams &params, const Term &s, const Term &t);
/// s >=kv' t: variable condition and heavier, or equally heavy with
/// root(s) >= root(t) or t a variable.
bool kvprime_geq(const OrderParams &params, const Term &s, const Term &t);

/// All u with t embedding into u at f: one element g(s1..sm) of tf_f(t)
/// with f > g replaced by one of its arguments. Results are AC-canonical,
/// sorted and duplicate-free.
std::vector<Term> emb_candidates(const Symbol &f, const OrderParams &params, const Term &t);

/// Linear polynomial with non-negative coefficients over variable names.
struct LinPoly {
  std::map<std::string, std::int64_t> coeffs;
  std::int64_t constant = 0;
  bool operator==(const LinPoly &) const = default;
};

/// #(S): each variable contributes itself, every other element 1.
LinPoly count_poly(std::span<const Term> s);
/// p >= q for every assignment of positive integers.
bool poly_ge(const LinPoly &p, const LinPoly &q);
/// p > q for every assignment of positive integers.
bool poly_gt(const LinPoly &p, const LinPoly &q);
std::string to_string(const LinPoly &p);

} // namespace ackbo
