#include "ackbo/trs.hpp"

namespace ackbo {

Trs make_trs(std::vector<Rule> rules) {
  Trs trs;
  for (const Rule &r : rules) {
    trs.signature.add_symbols_of(r.lhs);
    trs.signature.add_symbols_of(r.rhs);
  }
  trs.rules = std::move(rules);
  return trs;
}

} // namespace ackbo
