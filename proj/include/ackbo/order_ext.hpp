#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ackbo/params.hpp"
#include "ackbo/term.hpp"

namespace ackbo {

/// Outcome of an extended comparison. STRICT always implies that the weak
/// relation holds as well.
enum class ExtVerdict { none, weak, strict };

inline bool holds_weak(ExtVerdict v) { return v != ExtVerdict::none; }

/// An order pair (geq, gt) on terms given by two predicates. Set
/// equiv_symmetric when geq minus gt is symmetric; mul_ext then uses the
/// polynomial cancellation procedure instead of backtracking.
struct OrderPairOracle {
  std::function<bool(const Term &, const Term &)> geq;
  std::function<bool(const Term &, const Term &)> gt;
  bool equiv_symmetric = true;
};

/// Which pairs a successful multiset comparison used: `matched` pairs are
/// related by geq, `covering` pairs by gt. Indices refer to (M, N).
struct MulWitness {
  std::vector<std::pair<std::size_t, std::size_t>> matched;
  std::vector<std::pair<std::size_t, std::size_t>> covering;
};

/// Lexicographic extension on equal-length tuples. A strict decrease in the
/// first position already yields STRICT. Throws std::invalid_argument on a
/// length mismatch.
ExtVerdict lex_ext(const OrderPairOracle &o, std::span<const Term> xs, std::span<const Term> ys);

/// Multiset extension of an order pair. With equiv_symmetric the equivalent
/// pairs are cancelled greedily and every remaining element of N must be
/// covered by a strictly greater remaining element of M. Otherwise an
/// exhaustive memoized search over matchings decides the relation.
ExtVerdict mul_ext(const OrderPairOracle &o, std::span<const Term> m, std::span<const Term> n,
                   MulWitness *witness = nullptr);

/// Variable elements of s.
Multiset restrict_vars(std::span<const Term> s);

enum class RootRel { not_less, less, greater };

/// Non-variable elements whose root stands in `rel` to f under p.
Multiset restrict_root(std::span<const Term> s, const Precedence &p, const Symbol &f, RootRel rel);

/// The two multisets compared by S R^f T: the not-below-f part of S against
/// the not-below-f part of T plus the variables of T not cancelled by S.
std::pair<Multiset, Multiset> f_sides(std::span<const Term> s, std::span<const Term> t, const Symbol &f,
                                      const Precedence &p);

/// S R^f T for the order pair o.
ExtVerdict cmp_f(const OrderPairOracle &o, std::span<const Term> s, std::span<const Term> t, const Symbol &f,
                 const Precedence &p);

} // namespace ackbo
