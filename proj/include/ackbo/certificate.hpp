#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "ackbo/orient.hpp"
#include "ackbo/trs.hpp"

namespace ackbo {

/// JSON certificate of an orientation attempt:
///
///   {
///     "order": "ACKBO",
///     "status": "ORIENTED",
///     "params": {
///       "precedence": [["f", "+"], ...],      // pairs f > g
///       "weights": {"f": 1, ...},
///       "w0": 1,
///       "sc": [{"symbol": "f", "position": 1, "value": 2}, ...],
///       "status": {"h": "mul", ...}
///     },
///     "rules": [
///       {"lhs": "...", "rhs": "...", "verdict": "GT",
///        "trace": [{"lhs": "...", "rhs": "...", "case": "case 3(a)"}, ...]}
///     ],
///     "stats": {"precedences": 3, "candidates": 17, "wall_time_ms": 0.4}
///   }
///
/// "params" and "rules" are present only for ORIENTED results.
std::string certificate_json(OrderId id, const Trs &trs, const OrientResult &result);

/// Reads back the order and parameters of a certificate.
/// Throws ConfigError on malformed input.
std::pair<OrderId, OrderParams> read_certificate(std::string_view json);

} // namespace ackbo
