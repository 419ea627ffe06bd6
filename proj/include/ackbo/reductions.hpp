#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ackbo/orders.hpp"
#include "ackbo/params.hpp"
#include "ackbo/trs.hpp"

namespace ackbo {

/// CNF in DIMACS convention: literal v or -v for variable v in 1..num_vars.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  bool operator==(const CnfFormula &) const = default;
};

/// Truth value per variable index, total on 1..num_vars.
using Assignment = std::map<int, bool>;

/// Throws ConfigError when a literal is out of range.
void check_cnf(const CnfFormula &phi);
bool satisfies(const CnfFormula &phi, const Assignment &alpha);

/// Exhaustive search over all 2^num_vars assignments, in increasing binary
/// order with variable 1 as the lowest bit. Throws ConfigError above 20 variables.
std::optional<Assignment> sat_bruteforce(const CnfFormula &phi);

/// Ground TRS over a, b, c, +, p1..pm, d_i, e_i_j that a KV order orients
/// iff phi is satisfiable: the base rules fixing a > + > b and equal weights
/// of a, b and the p_j, plus one rule per clause. Within a clause, positive
/// and negative literals are taken in increasing variable order.
/// Throws ConfigError for an empty formula.
Trs encode_kv_orientability(const CnfFormula &phi);

/// The KV system extended by a(p_j(c)) -> p_j(a(c)) for every variable and
/// e_i_0(e_i_1(c)) -> e_i_1(e_i_0(c)) for every clause with a negative literal.
Trs encode_ackbo_orientability(const CnfFormula &phi);

/// Terms s and t with parameters such that s >KV' t iff phi is satisfiable.
/// s combines the terms f(x_i, ...) for both polarities of every variable
/// with a constant c under the AC symbol o, t combines f(x_i, a, ..., a),
/// the clause variables y_j and two copies of d. Weights: w0 = a = 1,
/// f = o = 0, and the smallest w(d) >= 1 leaving w(c) >= 1 with w(s) = w(t).
struct MembershipInstance {
  Term s;
  Term t;
  OrderParams params;
};
MembershipInstance encode_kvprime_membership(const CnfFormula &phi);

/// Parameters under which KV (or ACKBO) orients the corresponding encoding:
/// a > + > b, p_j > + for true and + > p_j for false variables, unit
/// weights, and one heavy d_i or e_i_j per clause. For ACKBO additionally
/// e_i_0 > e_i_1 and a > p_j. Throws ConfigError unless alpha satisfies phi
/// and id is KV or ACKBO.
OrderParams construct_witness(OrderId id, const CnfFormula &phi, const Assignment &alpha);

} // namespace ackbo
