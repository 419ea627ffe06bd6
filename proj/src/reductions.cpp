#include "ackbo/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ackbo {

namespace {

const Symbol kPlus("+", 2, true);
const Symbol kA("a", 1), kB("b", 1), kC("c", 0);

Term un(const Symbol &f, Term t) { return Term::app(f, {std::move(t)}); }
Term c() { return Term::app(kC); }
Symbol p(int j) { return Symbol("p" + std::to_string(j), 1); }
Symbol d(std::size_t i) { return Symbol("d" + std::to_string(i), 0); }
Symbol e(std::size_t i, std::size_t j) { return Symbol("e_" + std::to_string(i) + "_" + std::to_string(j), 1); }

struct Literals {
  std::vector<int> pos, neg;
};

Literals split(const std::vector<int> &clause) {
  Literals out;
  for (int lit : clause)
    (lit > 0 ? out.pos : out.neg).push_back(std::abs(lit));
  for (auto *v : {&out.pos, &out.neg}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return out;
}

void require_nonempty(const CnfFormula &phi) {
  check_cnf(phi);
  if (phi.clauses.empty())
    throw ConfigError("the encodings need a non-empty formula");
}

std::vector<Rule> base_rules(int m) {
  std::vector<Rule> rules;
  const Term cc = Term::app(kPlus, {c(), c()});
  rules.push_back({un(kA, cc), Term::app(kPlus, {un(kA, c()), c()})});
  rules.push_back({Term::app(kPlus, {un(kB, c()), c()}), un(kB, cc)});
  rules.push_back({un(kA, un(kB, un(kB, c()))), un(kB, un(kA, un(kA, c())))});
  for (int j = 1; j < m; ++j)
    rules.push_back({un(kA, un(p(j), c())), un(kB, un(p(j + 1), c()))});
  rules.push_back({un(kA, un(p(m), c())), un(kB, un(kA, c()))});
  rules.push_back({un(kA, un(kA, c())), un(kB, un(p(1), c()))});
  return rules;
}

Rule clause_rule(std::size_t i, const std::vector<int> &clause) {
  const Literals lits = split(clause);
  const std::size_t l = lits.neg.size();
  auto neg = [&](std::size_t j) { return j == 0 ? kA : p(lits.neg[j - 1]); };
  auto ee = [&](std::size_t j, std::size_t k) { return un(e(i, j), un(e(i, k), c())); };

  std::vector<Term> lhs{un(kB, un(kB, Term::app(kPlus, {c(), c()})))};
  std::vector<Term> rhs{un(kB, c()), un(kB, c())};
  for (int v : lits.pos) {
    lhs.push_back(un(p(v), un(kB, Term::app(d(i)))));
    rhs.push_back(un(kB, un(p(v), Term::app(d(i)))));
  }
  for (std::size_t j = 0; j <= l; ++j) {
    lhs.push_back(un(neg(j), ee(j, (j + 1) % (l + 1))));
    rhs.push_back(un(neg(j), ee(j, j)));
  }
  return {make_comb(kPlus, lhs), make_comb(kPlus, rhs)};
}

} // namespace

void check_cnf(const CnfFormula &phi) {
  if (phi.num_vars < 0)
    throw ConfigError("negative variable count");
  for (const auto &clause : phi.clauses)
    for (int lit : clause)
      if (lit == 0 || std::abs(lit) > phi.num_vars)
        throw ConfigError("literal " + std::to_string(lit) + " outside 1.." + std::to_string(phi.num_vars));
}

bool satisfies(const CnfFormula &phi, const Assignment &alpha) {
  for (const auto &clause : phi.clauses) {
    bool sat = false;
    for (int lit : clause) {
      auto it = alpha.find(std::abs(lit));
      if (it != alpha.end() && it->second == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat)
      return false;
  }
  return true;
}

std::optional<Assignment> sat_bruteforce(const CnfFormula &phi) {
  check_cnf(phi);
  if (phi.num_vars > 20)
    throw ConfigError("brute-force satisfiability is limited to 20 variables");
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << phi.num_vars); ++bits) {
    Assignment alpha;
    for (int v = 1; v <= phi.num_vars; ++v)
      alpha[v] = (bits >> (v - 1)) & 1u;
    if (satisfies(phi, alpha))
      return alpha;
  }
  return std::nullopt;
}

Trs encode_kv_orientability(const CnfFormula &phi) {
  require_nonempty(phi);
  if (phi.num_vars < 1)
    throw ConfigError("the encodings need at least one variable");
  std::vector<Rule> rules = base_rules(phi.num_vars);
  for (std::size_t i = 0; i < phi.clauses.size(); ++i)
    rules.push_back(clause_rule(i + 1, phi.clauses[i]));
  return make_trs(std::move(rules));
}

Trs encode_ackbo_orientability(const CnfFormula &phi) {
  require_nonempty(phi);
  if (phi.num_vars < 1)
    throw ConfigError("the encodings need at least one variable");
  std::vector<Rule> rules = base_rules(phi.num_vars);
  for (int j = 1; j <= phi.num_vars; ++j)
    rules.push_back({un(kA, un(p(j), c())), un(p(j), un(kA, c()))});
  for (std::size_t i = 0; i < phi.clauses.size(); ++i)
    if (!split(phi.clauses[i]).neg.empty())
      rules.push_back({un(e(i + 1, 0), un(e(i + 1, 1), c())), un(e(i + 1, 1), un(e(i + 1, 0), c()))});
  for (std::size_t i = 0; i < phi.clauses.size(); ++i)
    rules.push_back(clause_rule(i + 1, phi.clauses[i]));
  return make_trs(std::move(rules));
}

MembershipInstance encode_kvprime_membership(const CnfFormula &phi) {
  require_nonempty(phi);
  const int n = phi.num_vars;
  const std::size_t m = phi.clauses.size();
  const Symbol f("f", m + 1), a("a", 0), o("o", 2, true), cs("c", 0), ds("d", 0);

  auto t_of = [&](int v, int sign) {
    std::vector<Term> args{Term::var("x" + std::to_string(v))};
    for (std::size_t j = 0; j < m; ++j) {
      const auto &clause = phi.clauses[j];
      const bool in = sign != 0 && std::find(clause.begin(), clause.end(), sign * v) != clause.end();
      args.push_back(in ? Term::var("y" + std::to_string(j + 1)) : Term::app(a));
    }
    return Term::app(f, std::move(args));
  };

  std::vector<Term> lhs, rhs;
  for (int v = 1; v <= n; ++v) {
    lhs.push_back(t_of(v, 1));
    lhs.push_back(t_of(v, -1));
  }
  lhs.push_back(Term::app(cs));
  for (int v = 1; v <= n; ++v)
    rhs.push_back(t_of(v, 0));
  for (std::size_t j = 0; j < m; ++j)
    rhs.push_back(Term::var("y" + std::to_string(j + 1)));
  rhs.push_back(Term::app(ds));
  rhs.push_back(Term::app(ds));

  // Every f-term weighs m+1; balance 2n(m+1) + w(c) = n(m+1) + m + 2w(d).
  const std::int64_t fw = static_cast<std::int64_t>(m) + 1;
  std::int64_t wd = 1;
  while (static_cast<std::int64_t>(m) + 2 * wd - n * fw < 1)
    ++wd;
  const std::int64_t wc = static_cast<std::int64_t>(m) + 2 * wd - n * fw;

  MembershipInstance out{make_comb(o, lhs), make_comb(o, rhs), {}};
  out.params.weights.w0 = 1;
  out.params.weights.w = {{"a", 1}, {"f", 0}, {"o", 0}, {"c", wc}, {"d", wd}};
  out.params.precedence.add("o", "c");
  out.params.precedence.add("o", "d");
  return out;
}

OrderParams construct_witness(OrderId id, const CnfFormula &phi, const Assignment &alpha) {
  if (id != OrderId::kv && id != OrderId::ackbo)
    throw ConfigError("witness parameters exist for KV and ACKBO only");
  require_nonempty(phi);
  for (int v = 1; v <= phi.num_vars; ++v)
    if (!alpha.count(v))
      throw ConfigError("assignment misses variable " + std::to_string(v));
  if (!satisfies(phi, alpha))
    throw ConfigError("assignment does not satisfy the formula");

  const Trs trs = id == OrderId::kv ? encode_kv_orientability(phi) : encode_ackbo_orientability(phi);
  OrderParams params;
  params.weights.w0 = 1;
  for (const Symbol &s : trs.signature.symbols())
    params.weights.w[s.name] = 1;

  Precedence &prec = params.precedence;
  prec.add("a", "+");
  prec.add("+", "b");
  for (int v = 1; v <= phi.num_vars; ++v) {
    const std::string pv = p(v).name;
    if (alpha.at(v))
      prec.add(pv, "+");
    else
      prec.add("+", pv);
    if (id == OrderId::ackbo)
      prec.add("a", pv);
  }

  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    const Literals lits = split(phi.clauses[i]);
    if (id == OrderId::ackbo && !lits.neg.empty())
      prec.add(e(i + 1, 0).name, e(i + 1, 1).name);
    // Base weights are 1, so 1 + 2 * max of the other e-weights is 3.
    const bool pos_true = std::any_of(lits.pos.begin(), lits.pos.end(), [&](int v) { return alpha.at(v); });
    if (pos_true) {
      params.weights.w[d(i + 1).name] = 3;
      continue;
    }
    for (std::size_t j = 0; j < lits.neg.size(); ++j)
      if (!alpha.at(lits.neg[j])) {
        params.weights.w[e(i + 1, j + 1).name] = 3;
        break;
      }
  }
  return params;
}

} // namespace ackbo
