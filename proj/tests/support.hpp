// Helpers shared by the test binaries: term construction, exhaustive and
// random term generation, and independent oracles.
#pragma once

#include <algorithm>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ackbo/order_ext.hpp"
#include "ackbo/orders.hpp"
#include "ackbo/parse.hpp"
#include "ackbo/term.hpp"

namespace testing {

using namespace ackbo;

/// x, y, z, u, v are variables, binary operators are AC.
inline Term T(std::string_view text) {
  TermSyntax syn;
  syn.variables = {"x", "y", "z", "u", "v", "x1", "x2", "y1", "y2"};
  syn.infix_ac = true;
  return parse_term(text, syn);
}

inline std::string data_path(const std::string &name) { return std::string(TEST_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline Trs load_trs(const std::string &name) { return parse_trs(slurp(data_path(name))); }
inline OrderParams load_params(const std::string &name) { return parse_params(slurp(data_path(name))); }

/// Every AC-canonical term of size <= max_size built from the given symbols
/// and variables, without duplicates, sorted by (size, term order).
inline std::vector<Term> universe(const std::vector<Symbol> &syms, const std::vector<std::string> &vars,
                                  std::size_t max_size) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  std::set<Term, TermLess> seen;
  auto keep = [&](const Term &t, std::size_t size) {
    Term c = ac_canonical(t);
    if (seen.insert(c).second)
      by_size[size].push_back(c);
  };
  for (const auto &x : vars)
    keep(Term::var(x), 1);
  for (const auto &f : syms)
    if (f.arity == 0)
      keep(Term::app(f), 1);
  for (std::size_t n = 2; n <= max_size; ++n) {
    for (const auto &f : syms) {
      if (f.arity == 1)
        for (std::size_t i = 1; i < n; ++i)
          if (i == n - 1)
            for (const auto &t : by_size[i])
              keep(Term::app(f, {t}), n);
      if (f.arity == 2)
        for (std::size_t i = 1; i + 1 < n; ++i)
          for (const auto &l : by_size[i])
            for (const auto &r : by_size[n - 1 - i])
              keep(Term::app(f, {l, r}), n);
    }
  }
  std::vector<Term> out;
  for (auto &level : by_size)
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

/// Random term with at most `budget` symbol occurrences.
class TermGen {
public:
  TermGen(std::vector<Symbol> syms, std::vector<std::string> vars, std::uint32_t seed)
      : syms_(std::move(syms)), vars_(std::move(vars)), rng_(seed) {}

  Term operator()(std::size_t budget) {
    std::vector<const Symbol *> fit;
    for (const auto &f : syms_)
      if (f.arity + 1 <= budget)
        fit.push_back(&f);
    const bool leaf = budget <= 1 || std::uniform_int_distribution<int>(0, 3)(rng_) == 0;
    if (leaf) {
      std::vector<Term> leaves;
      for (const auto &x : vars_)
        leaves.push_back(Term::var(x));
      for (const auto &f : syms_)
        if (f.arity == 0)
          leaves.push_back(Term::app(f));
      return leaves[pick(leaves.size())];
    }
    const Symbol &f = *fit[pick(fit.size())];
    std::vector<Term> args;
    std::size_t left = budget - 1;
    for (std::size_t i = 0; i < f.arity; ++i) {
      const std::size_t share = std::max<std::size_t>(1, left / (f.arity - i));
      const std::size_t b = 1 + pick(share);
      args.push_back((*this)(b));
      left = left > b ? left - b : 1;
    }
    return Term::app(f, std::move(args));
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::mt19937 &rng() { return rng_; }

private:
  std::vector<Symbol> syms_;
  std::vector<std::string> vars_;
  std::mt19937 rng_;
};

/// Random AC-equal variant: flattens AC nests, shuffles, and rebuilds them
/// with random bracketing.
inline Term ac_shuffle(const Term &t, std::mt19937 &rng) {
  if (t.is_var())
    return t;
  const Symbol &f = t.symbol();
  if (!f.ac) {
    std::vector<Term> args;
    for (const auto &a : t.args())
      args.push_back(ac_shuffle(a, rng));
    return Term::app(f, std::move(args));
  }
  std::vector<Term> elems;
  std::vector<Term> stack{t};
  while (!stack.empty()) {
    Term u = stack.back();
    stack.pop_back();
    if (u.has_root(f)) {
      stack.push_back(u.arg(0));
      stack.push_back(u.arg(1));
    } else {
      elems.push_back(ac_shuffle(u, rng));
    }
  }
  std::shuffle(elems.begin(), elems.end(), rng);
  while (elems.size() > 1) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, elems.size() - 2)(rng);
    Term joined = Term::app(f, {elems[i], elems[i + 1]});
    elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(i), elems.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    elems.insert(elems.begin() + static_cast<std::ptrdiff_t>(i), joined);
  }
  return elems[0];
}

/// =AC decided without canonical forms: flatten AC nests and try every
/// pairing of the arguments.
inline bool ac_equal_oracle(const Term &s, const Term &t) {
  if (s.is_var() || t.is_var())
    return s.is_var() && t.is_var() && s.name() == t.name();
  if (!(s.symbol() == t.symbol()))
    return false;
  const Symbol &f = s.symbol();
  if (!f.ac) {
    for (std::size_t i = 0; i < f.arity; ++i)
      if (!ac_equal_oracle(s.arg(i), t.arg(i)))
        return false;
    return true;
  }
  auto flat = [&](const Term &u) {
    std::vector<Term> out, stack{u};
    while (!stack.empty()) {
      Term v = stack.back();
      stack.pop_back();
      if (v.has_root(f)) {
        stack.push_back(v.arg(0));
        stack.push_back(v.arg(1));
      } else {
        out.push_back(v);
      }
    }
    return out;
  };
  auto a = flat(s), b = flat(t);
  if (a.size() != b.size())
    return false;
  std::vector<bool> used(b.size(), false);
  auto match = [&](auto &&self, std::size_t i) -> bool {
    if (i == a.size())
      return true;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!used[j] && ac_equal_oracle(a[i], b[j])) {
        used[j] = true;
        if (self(self, i + 1))
          return true;
        used[j] = false;
      }
    return false;
  };
  return match(match, 0);
}

/// The multiset extension read off its definition: some arrangement of M
/// and N and some k such that the first k pairs are related by geq and every
/// later element of N lies strictly below some later element of M.
inline ExtVerdict mul_oracle(const OrderPairOracle &o, std::vector<Term> m, std::vector<Term> n) {
  std::vector<std::size_t> pm(m.size()), pn(n.size());
  for (std::size_t i = 0; i < pm.size(); ++i)
    pm[i] = i;
  ExtVerdict best = ExtVerdict::none;
  do {
    for (std::size_t i = 0; i < pn.size(); ++i)
      pn[i] = i;
    do {
      for (std::size_t k = 0; k <= std::min(m.size(), n.size()); ++k) {
        bool ok = true;
        for (std::size_t j = 0; ok && j < k; ++j)
          ok = o.geq(m[pm[j]], n[pn[j]]);
        for (std::size_t j = k; ok && j < n.size(); ++j) {
          bool covered = false;
          for (std::size_t i = k; !covered && i < m.size(); ++i)
            covered = o.gt(m[pm[i]], n[pn[j]]);
          ok = covered;
        }
        if (!ok)
          continue;
        if (k < m.size())
          return ExtVerdict::strict;
        best = ExtVerdict::weak;
      }
    } while (std::next_permutation(pn.begin(), pn.end()));
  } while (std::next_permutation(pm.begin(), pm.end()));
  return best;
}

/// Satisfaction of a CNF read clause by clause, independent of the library.
inline bool eval_cnf(const std::vector<std::vector<int>> &clauses, const std::vector<bool> &value) {
  return std::all_of(clauses.begin(), clauses.end(), [&](const auto &c) {
    return std::any_of(c.begin(), c.end(), [&](int lit) { return value[std::abs(lit)] == (lit > 0); });
  });
}

/// Independent variable coefficient: product of subterm coefficients along
/// every path from the root to an occurrence of x.
inline std::int64_t vc_oracle(const std::string &x, const Term &t, const WeightFn &wf, std::int64_t scale = 1) {
  if (t.is_var())
    return t.name() == x ? scale : 0;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    auto it = wf.sc.find({t.name(), i + 1});
    sum += vc_oracle(x, t.arg(i), wf, scale * (it == wf.sc.end() ? 1 : it->second));
  }
  return sum;
}

} // namespace testing
