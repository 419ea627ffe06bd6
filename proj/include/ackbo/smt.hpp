#pragma once

#include <string>
#include <string_view>

#include "ackbo/orders.hpp"
#include "ackbo/params.hpp"
#include "ackbo/trs.hpp"

namespace ackbo {

/// Encodes "some admissible parameters make id orient every rule of trs" as
/// an SMT-LIB 2 script over QF_LIA. Symbols are numbered by sorted name and
/// announced in `; symbol <index> <name>` comments; the script declares
///
///   w0, w_<i>       integer weights
///   p_<i>_<j>       precedence pair i > j
///   g_<k>           the k-th comparison s > t needed (listed in comments)
///   c_<k>_<case>    case selectors of comparison k
///   m_<n>_<i>_<j>, e_<n>_<i>
///                   matching variables of the n-th multiset comparison
///
/// Comparisons appear only positively, as implications g -> (or selectors),
/// so the script is satisfiable iff parameters exist. Supported ids are
/// S, KV, KV_PRIME and ACKBO; others throw ConfigError.
std::string export_constraints(OrderId id, const Trs &trs);

/// Reads a model given as lines `name value` (also `name = value` or
/// `name -> value`; `;` starts a comment) and rebuilds the parameters for
/// the symbol numbering used by export_constraints. Unknown names are
/// ignored, absent weights default to 0. Throws ConfigError on malformed
/// lines or when the decoded precedence is cyclic.
OrderParams decode_model(std::string_view model, const Trs &trs);

} // namespace ackbo
