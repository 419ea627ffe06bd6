#pragma once

#include <span>
#include <vector>

#include "ackbo/term.hpp"

namespace ackbo {

struct Rule {
  Term lhs;
  Term rhs;
  bool operator==(const Rule &) const = default;
};

/// A term rewrite system together with its signature. AC symbols are
/// marked in the signature.
struct Trs {
  Signature signature;
  std::vector<Rule> rules;
  bool operator==(const Trs &) const = default;
};

/// Builds a Trs whose signature holds exactly the symbols of rules.
Trs make_trs(std::vector<Rule> rules);

} // namespace ackbo
