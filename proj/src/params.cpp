#include "ackbo/params.hpp"

#include <algorithm>

namespace ackbo {

void Precedence::add(const std::string &f, const std::string &g) {
  if (f == g || greater(g, f))
    throw ConfigError("precedence cycle through '" + f + "' and '" + g + "'");
  if (greater(f, g))
    return;
  std::vector<std::string> above{f}, below{g};
  for (const auto &[a, b] : pairs_) {
    if (b == f)
      above.push_back(a);
    if (a == g)
      below.push_back(b);
  }
  for (const auto &a : above)
    for (const auto &b : below)
      pairs_.emplace(a, b);
}

void Precedence::add_chain(std::span<const std::string> chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    add(chain[i], chain[i + 1]);
}

Precedence Precedence::from_pairs(std::span<const std::pair<std::string, std::string>> pairs) {
  Precedence p;
  for (const auto &[f, g] : pairs)
    p.add(f, g);
  return p;
}

bool Precedence::greater(std::string_view f, std::string_view g) const {
  return pairs_.find(std::pair<std::string_view, std::string_view>(f, g)) != pairs_.end();
}

bool Precedence::total_on(std::span<const std::string> syms) const {
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      if (syms[i] != syms[j] && !comparable(syms[i], syms[j]))
        return false;
  return true;
}

bool Precedence::minimal(std::string_view name) const {
  return std::none_of(pairs_.begin(), pairs_.end(), [&](const auto &p) { return p.first == name; });
}

std::int64_t WeightFn::of(std::string_view f) const {
  auto it = w.find(f);
  if (it == w.end())
    throw ConfigError("no weight given for symbol '" + std::string(f) + "'");
  return it->second;
}

std::int64_t WeightFn::coeff(const std::string &f, std::size_t pos) const {
  auto it = sc.find({f, pos});
  return it == sc.end() ? 1 : it->second;
}

bool WeightFn::has_nontrivial_sc() const {
  return std::any_of(sc.begin(), sc.end(), [](const auto &e) { return e.second != 1; });
}

Status OrderParams::status_of(std::string_view f) const {
  auto it = status.find(f);
  return it == status.end() ? Status::lex : it->second;
}

std::int64_t weight(const Term &t, const WeightFn &wf) {
  if (t.is_var())
    return wf.w0;
  std::int64_t total = wf.of(t.name());
  for (std::size_t i = 0; i < t.args().size(); ++i)
    total += wf.coeff(t.name(), i + 1) * weight(t.arg(i), wf);
  return total;
}

std::int64_t vc(std::string_view x, const Term &t, const WeightFn &wf) {
  if (t.is_var())
    return t.name() == x ? 1 : 0;
  if (t.is_ground())
    return 0;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < t.args().size(); ++i)
    total += wf.coeff(t.name(), i + 1) * vc(x, t.arg(i), wf);
  return total;
}

bool vc_condition(const Term &s, const Term &t, const WeightFn &wf) {
  for (const auto &x : variables(t))
    if (vc(x, s, wf) < vc(x, t, wf))
      return false;
  return true;
}

std::string admissibility_violation(const Precedence &p, const WeightFn &wf, const Signature &sig) {
  if (wf.w0 <= 0)
    return "w0 must be positive";
  for (const auto &[key, v] : wf.sc)
    if (v <= 0)
      return "subterm coefficient of '" + key.first + "' at position " + std::to_string(key.second) +
             " must be positive";
  const auto syms = sig.symbols();
  for (const Symbol &f : syms) {
    auto it = wf.w.find(f.name);
    if (it == wf.w.end())
      return "no weight given for symbol '" + f.name + "'";
    const std::int64_t wfv = it->second;
    if (wfv < 0)
      return "weight of '" + f.name + "' is negative";
    if (f.arity == 0 && wfv < wf.w0)
      return "constant '" + f.name + "' weighs less than w0";
    if (f.arity == 1 && wfv == 0) {
      for (const Symbol &g : syms)
        if (g.name != f.name && !p.greater(f.name, g.name))
          return "zero-weight unary symbol '" + f.name + "' is not above '" + g.name + "'";
    }
  }
  return {};
}

bool admissible(const Precedence &p, const WeightFn &wf, const Signature &sig) {
  return admissibility_violation(p, wf, sig).empty();
}

} // namespace ackbo
