#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ackbo/orders.hpp"
#include "ackbo/params.hpp"
#include "ackbo/trs.hpp"

namespace ackbo {

enum class PrecedenceMode { total, partial, fixed };

struct SearchConfig {
  PrecedenceMode mode = PrecedenceMode::total;
  /// The only precedence tried in fixed mode.
  Precedence fixed;
  /// Symbol weights range over 0..max_weight, w0 over 1..max_weight.
  std::int64_t max_weight = 3;
  /// Subterm coefficients range over 1..max_sc (ACKBO_SC only).
  std::int64_t max_sc = 2;
  /// Wall-clock budget in seconds; exhausting it yields unknown_within_bounds.
  double time_budget = 60.0;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Status map passed through to AC-RPO.
  std::map<std::string, Status, std::less<>> status;
};

enum class OrientStatus { oriented, not_orientable_within_bounds, unknown_within_bounds };

std::string_view to_string(OrientStatus s);

struct SearchStats {
  std::uint64_t precedences = 0;
  std::uint64_t candidates = 0;
  double wall_time_ms = 0;
};

struct OrientResult {
  OrientStatus status = OrientStatus::not_orientable_within_bounds;
  /// Witness parameters; meaningful only when oriented.
  OrderParams params;
  std::vector<Verdict> verdicts;
  SearchStats stats;
};

/// compare(id, params, l, r) for every rule l -> r. Throws ConfigError when
/// params are invalid for id over the signature of trs.
std::vector<Verdict> orient_check(OrderId id, const OrderParams &params, const Trs &trs);

/// Bounded-complete search for parameters orienting every rule of trs.
/// Precedences are the outer loop in canonical order, weight vectors
/// (w0 first, then symbols by name) the inner loop in lexicographic order.
/// Throws ConfigError when partial mode is asked for more than 8 symbols.
OrientResult search(OrderId id, const Trs &trs, const SearchConfig &cfg);

/// Enumerates every strict partial order on n labelled elements (n <= 8) as a
/// bitmask with bit a*n+b set iff a > b. Orders come sorted by number of pairs,
/// ties broken by a fixed generation order. visit returns false to stop.
void for_each_partial_order(std::size_t n, const std::function<bool(std::uint64_t)> &visit);

/// Every strict total order on n labelled elements, following the
/// lexicographic order of permutations (highest element first).
void for_each_total_order(std::size_t n, const std::function<bool(std::uint64_t)> &visit);

/// Converts a bitmask over names (as produced above) to a Precedence.
Precedence precedence_from_mask(std::span<const std::string> names, std::uint64_t mask);

} // namespace ackbo
