#include "ackbo/smt.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "ackbo/order_ext.hpp"

namespace ackbo {

namespace {

using Formula = std::string;

const Formula kTrue = "true";
const Formula kFalse = "false";

Formula and_(const std::vector<Formula> &xs) {
  std::vector<Formula> keep;
  for (const Formula &x : xs) {
    if (x == kFalse)
      return kFalse;
    if (x != kTrue)
      keep.push_back(x);
  }
  if (keep.empty())
    return kTrue;
  if (keep.size() == 1)
    return keep.front();
  std::string out = "(and";
  for (const Formula &x : keep)
    out += " " + x;
  return out + ")";
}

Formula or_(const std::vector<Formula> &xs) {
  std::vector<Formula> keep;
  for (const Formula &x : xs) {
    if (x == kTrue)
      return kTrue;
    if (x != kFalse)
      keep.push_back(x);
  }
  if (keep.empty())
    return kFalse;
  if (keep.size() == 1)
    return keep.front();
  std::string out = "(or";
  for (const Formula &x : keep)
    out += " " + x;
  return out + ")";
}

Formula not_(const Formula &x) {
  if (x == kTrue)
    return kFalse;
  if (x == kFalse)
    return kTrue;
  return "(not " + x + ")";
}

Formula implies(const Formula &a, const Formula &b) {
  if (a == kFalse || b == kTrue)
    return kTrue;
  if (a == kTrue)
    return b;
  return "(=> " + a + " " + b + ")";
}

bool is_power_of(const Term &s, const Term &x) {
  if (s.is_var() || s.args().size() != 1)
    return false;
  const Term *cur = &s;
  while (cur->is_app() && cur->symbol() == s.symbol())
    cur = &cur->arg(0);
  return *cur == x;
}

struct PairHash {
  std::size_t operator()(const std::pair<Term, Term> &p) const noexcept {
    return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
  }
};

// One side of a multiset comparison: elements and their membership formulas.
struct Side {
  std::vector<Term> elems;
  std::vector<Formula> in;
  void add(Term t, Formula f) {
    if (f == kFalse)
      return;
    elems.push_back(std::move(t));
    in.push_back(std::move(f));
  }
};

enum class MulMode { strict, equal };

class Encoder {
public:
  Encoder(OrderId id, const Trs &trs) : id_(id) {
    Signature sig = trs.signature;
    for (const Rule &r : trs.rules) {
      sig.add_symbols_of(r.lhs);
      sig.add_symbols_of(r.rhs);
    }
    syms_ = sig.symbols();
    for (std::size_t i = 0; i < syms_.size(); ++i)
      index_.emplace(syms_[i].name, i);
    for (const Rule &r : trs.rules)
      rules_.push_back({ac_canonical(r.lhs), ac_canonical(r.rhs)});
  }

  std::string run() {
    const std::size_t n = syms_.size();
    std::vector<Formula> goals;
    for (const Rule &r : rules_)
      goals.push_back(r.lhs.is_var() ? kFalse : gt(r.lhs, r.rhs));
    while (!work_.empty()) {
      auto [k, s, t] = work_.back();
      work_.pop_back();
      encode_gt(k, s, t);
    }

    std::ostringstream out;
    out << "; orientability of " << rules_.size() << " rules under " << to_string(id_) << "\n";
    for (std::size_t i = 0; i < n; ++i)
      out << "; symbol " << i << " " << syms_[i].name << (syms_[i].ac ? " ac" : "") << "\n";
    for (std::size_t k = 0; k < pairs_.size(); ++k)
      out << "; g_" << k << ": " << to_string(pairs_[k].first) << " > " << to_string(pairs_[k].second) << "\n";
    out << "(set-logic QF_LIA)\n";
    out << "(declare-fun w0 () Int)\n";
    for (std::size_t i = 0; i < n; ++i)
      out << "(declare-fun w_" << i << " () Int)\n";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          out << "(declare-fun p_" << i << "_" << j << " () Bool)\n";
    for (const std::string &b : bools_)
      out << "(declare-fun " << b << " () Bool)\n";

    auto assert_ = [&](const Formula &f) {
      if (f != kTrue)
        out << "(assert " << f << ")\n";
    };
    assert_("(> w0 0)");
    for (std::size_t i = 0; i < n; ++i) {
      assert_("(>= w_" + std::to_string(i) + " 0)");
      if (syms_[i].arity == 0)
        assert_("(>= w_" + std::to_string(i) + " w0)");
      if (syms_[i].arity == 1) {
        std::vector<Formula> above;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i)
            above.push_back(prec(i, j));
        assert_(implies("(= w_" + std::to_string(i) + " 0)", and_(above)));
      }
      if (id_ == OrderId::s && syms_[i].ac)
        for (std::size_t j = 0; j < n; ++j)
          if (j != i)
            assert_(not_(prec(i, j)));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j)
          continue;
        if (i < j)
          assert_(not_(and_({prec(i, j), prec(j, i)})));
        for (std::size_t k = 0; k < n; ++k)
          if (k != i && k != j)
            assert_(implies(and_({prec(i, j), prec(j, k)}), prec(i, k)));
      }
    for (const Formula &f : constraints_)
      assert_(f);
    for (const Formula &g : goals)
      assert_(g);
    out << "(check-sat)\n";
    return out.str();
  }

private:
  Formula prec(std::size_t i, std::size_t j) const {
    if (i == j)
      return kFalse;
    return "p_" + std::to_string(i) + "_" + std::to_string(j);
  }
  Formula prec(const std::string &f, const std::string &g) const { return prec(index_.at(f), index_.at(g)); }

  std::string fresh(const std::string &name) {
    bools_.push_back(name);
    return name;
  }

  // w(t) as a linear term over w0 and w_i.
  std::string weight(const Term &t) const {
    std::map<std::size_t, std::int64_t> coeff;
    std::int64_t vars = 0;
    collect(t, coeff, vars);
    std::vector<std::string> parts;
    auto part = [](std::int64_t c, const std::string &v) { return c == 1 ? v : "(* " + std::to_string(c) + " " + v + ")"; };
    if (vars)
      parts.push_back(part(vars, "w0"));
    for (const auto &[i, c] : coeff)
      parts.push_back(part(c, "w_" + std::to_string(i)));
    if (parts.empty())
      return "0";
    if (parts.size() == 1)
      return parts.front();
    std::string out = "(+";
    for (const auto &p : parts)
      out += " " + p;
    return out + ")";
  }

  void collect(const Term &t, std::map<std::size_t, std::int64_t> &coeff, std::int64_t &vars) const {
    if (t.is_var()) {
      ++vars;
      return;
    }
    ++coeff[index_.at(t.name())];
    for (const Term &a : t.args())
      collect(a, coeff, vars);
  }

  Formula wcmp(const char *op, const Term &a, const Term &b) const {
    return std::string("(") + op + " " + weight(a) + " " + weight(b) + ")";
  }

  Formula gt(const Term &s, const Term &t) {
    if (s.is_var() || s == t)
      return kFalse;
    auto key = std::make_pair(s, t);
    if (auto it = gidx_.find(key); it != gidx_.end())
      return "g_" + std::to_string(it->second);
    const std::size_t k = pairs_.size();
    gidx_.emplace(key, k);
    pairs_.push_back(key);
    work_.push_back({k, s, t});
    return fresh("g_" + std::to_string(k));
  }

  Formula wroot_eq(const Term &a, const Term &b) const {
    if (a.is_var() || b.is_var())
      return a == b ? kTrue : kFalse;
    if (a.symbol() != b.symbol() || var_counts(a) != var_counts(b))
      return kFalse;
    return wcmp("=", a, b);
  }

  Formula wroot_gt(const Term &a, const Term &b) const {
    if (!var_condition(a, b))
      return kFalse;
    Formula root = a.is_app() && b.is_app() && a.name() != b.name() ? prec(a.name(), b.name()) : kFalse;
    return or_({wcmp(">", a, b), and_({wcmp("=", a, b), root})});
  }

  Formula kvprime_geq(const Term &a, const Term &b) const {
    if (!var_condition(a, b))
      return kFalse;
    Formula root = b.is_var()                                         ? kTrue
                   : a.is_var()                                       ? kFalse
                   : a.symbol() == b.symbol()                         ? kTrue
                   : a.name() != b.name() ? prec(a.name(), b.name()) : kFalse;
    return or_({wcmp(">", a, b), and_({wcmp("=", a, b), root})});
  }

  // Multiset comparison of two sides. Syntactically equal elements are
  // cancelled first, which never changes the outcome for an order pair.
  template <class Ge, class Gt> Formula mul(Side m, Side n, MulMode mode, bool syntactic, Ge ge, Gt gtf) {
    for (std::size_t i = 0; i < m.elems.size();) {
      auto it = std::find(n.elems.begin(), n.elems.end(), m.elems[i]);
      if (it != n.elems.end() && n.in[it - n.elems.begin()] == m.in[i]) {
        const auto j = it - n.elems.begin();
        n.elems.erase(it);
        n.in.erase(n.in.begin() + j);
        m.elems.erase(m.elems.begin() + i);
        m.in.erase(m.in.begin() + i);
      } else {
        ++i;
      }
    }
    if (syntactic) {
      // The preorder is equality, so nothing else can be matched.
      if (mode == MulMode::equal) {
        std::vector<Formula> absent;
        for (const auto &f : m.in)
          absent.push_back(not_(f));
        for (const auto &f : n.in)
          absent.push_back(not_(f));
        return and_(absent);
      }
      std::vector<Formula> parts{or_(m.in)};
      for (std::size_t j = 0; j < n.elems.size(); ++j) {
        std::vector<Formula> cover;
        for (std::size_t i = 0; i < m.elems.size(); ++i)
          cover.push_back(and_({m.in[i], gtf(m.elems[i], n.elems[j])}));
        parts.push_back(implies(n.in[j], or_(cover)));
      }
      return and_(parts);
    }

    const std::string id = std::to_string(mul_count_++);
    const std::size_t mm = m.elems.size(), nn = n.elems.size();
    std::vector<std::vector<Formula>> g(mm, std::vector<Formula>(nn));
    std::vector<Formula> e(mm);
    for (std::size_t i = 0; i < mm; ++i) {
      e[i] = fresh("e_" + id + "_" + std::to_string(i));
      for (std::size_t j = 0; j < nn; ++j)
        g[i][j] = fresh("m_" + id + "_" + std::to_string(i) + "_" + std::to_string(j));
    }
    std::vector<Formula> parts;
    for (std::size_t j = 0; j < nn; ++j) {
      std::vector<Formula> some;
      for (std::size_t i = 0; i < mm; ++i) {
        some.push_back(g[i][j]);
        for (std::size_t i2 = i + 1; i2 < mm; ++i2)
          parts.push_back(not_(and_({g[i][j], g[i2][j]})));
      }
      parts.push_back(implies(n.in[j], or_(some)));
    }
    for (std::size_t i = 0; i < mm; ++i) {
      std::vector<Formula> partner;
      for (std::size_t j = 0; j < nn; ++j) {
        partner.push_back(g[i][j]);
        parts.push_back(implies(g[i][j], and_({m.in[i], n.in[j]})));
        parts.push_back(implies(and_({g[i][j], e[i]}), ge(m.elems[i], n.elems[j])));
        parts.push_back(implies(and_({g[i][j], not_(e[i])}), gtf(m.elems[i], n.elems[j])));
        for (std::size_t j2 = j + 1; j2 < nn; ++j2)
          parts.push_back(not_(and_({e[i], g[i][j], g[i][j2]})));
      }
      parts.push_back(implies(e[i], and_({m.in[i], or_(partner)})));
    }
    std::vector<Formula> tail;
    for (std::size_t i = 0; i < mm; ++i)
      tail.push_back(mode == MulMode::strict ? and_({m.in[i], not_(e[i])}) : implies(m.in[i], e[i]));
    parts.push_back(mode == MulMode::strict ? or_(tail) : and_(tail));
    return and_(parts);
  }

  void encode_gt(std::size_t k, const Term &s, const Term &t) {
    const std::string g = "g_" + std::to_string(k);
    std::vector<std::pair<std::string, Formula>> cases;
    if (var_condition(s, t)) {
      cases.emplace_back("w", wcmp(">", s, t));
      const Formula eqw = wcmp("=", s, t);
      if (t.is_var()) {
        if (is_power_of(s, t))
          cases.emplace_back("0", eqw);
      } else if (s.name() != t.name()) {
        cases.emplace_back("1", and_({eqw, prec(s.name(), t.name())}));
      } else if (!s.symbol().ac) {
        for (std::size_t i = 0; i < s.args().size(); ++i)
          if (s.arg(i) != t.arg(i)) {
            cases.emplace_back("2", and_({eqw, gt(s.arg(i), t.arg(i))}));
            break;
          }
      } else {
        encode_ac(s, t, eqw, cases);
      }
    }
    std::vector<Formula> sel;
    for (const auto &[label, f] : cases) {
      if (f == kFalse)
        continue;
      const std::string c = fresh("c_" + std::to_string(k) + "_" + label);
      sel.push_back(c);
      constraints_.push_back(implies(c, f));
    }
    constraints_.push_back(implies(g, or_(sel)));
  }

  void encode_ac(const Term &s, const Term &t, const Formula &eqw,
                 std::vector<std::pair<std::string, Formula>> &cases) {
    const Symbol &f = s.symbol();
    const Multiset S = top_flatten(f, s), T = top_flatten(f, t);
    auto eq_ac = [](const Term &a, const Term &b) { return a == b ? kTrue : kFalse; };
    auto gt_rec = [this](const Term &a, const Term &b) { return gt(a, b); };
    auto all = [](const Multiset &xs) {
      Side side;
      for (const Term &x : xs)
        side.add(x, kTrue);
      return side;
    };
    if (id_ == OrderId::s) {
      cases.emplace_back("3", and_({eqw, mul(all(S), all(T), MulMode::strict, true, eq_ac, gt_rec)}));
      return;
    }
    Side l, r;
    for (const Term &x : S)
      if (x.is_app())
        l.add(x, not_(prec(f.name, x.name())));
    for (const Term &x : T)
      if (x.is_app())
        r.add(x, not_(prec(f.name, x.name())));
    for (const Term &x : multiset_difference(restrict_vars(T), restrict_vars(S)))
      r.add(x, kTrue);

    Formula strict_f, equal_f;
    if (id_ == OrderId::ackbo) {
      strict_f = mul(l, r, MulMode::strict, true, eq_ac, gt_rec);
      equal_f = mul(l, r, MulMode::equal, true, eq_ac, gt_rec);
    } else if (id_ == OrderId::kv) {
      auto ge = [this](const Term &a, const Term &b) { return wroot_eq(a, b); };
      auto gtw = [this](const Term &a, const Term &b) { return wroot_gt(a, b); };
      strict_f = mul(l, r, MulMode::strict, false, ge, gtw);
      equal_f = mul(l, r, MulMode::equal, false, ge, gtw);
    } else {
      auto ge = [this](const Term &a, const Term &b) { return kvprime_geq(a, b); };
      auto gtw = [this](const Term &a, const Term &b) { return wroot_gt(a, b); };
      strict_f = mul(l, r, MulMode::strict, false, ge, gtw);
      equal_f = mul(l, r, MulMode::equal, false, ge, gtw);
    }
    cases.emplace_back("3a", and_({eqw, strict_f}));
    if (S.size() > T.size())
      cases.emplace_back("3b", and_({eqw, equal_f}));
    if (S.size() == T.size()) {
      Formula tie;
      if (id_ == OrderId::ackbo) {
        Side ls, rs;
        for (const Term &x : S)
          if (x.is_app())
            ls.add(x, prec(f.name, x.name()));
        for (const Term &x : T)
          if (x.is_app())
            rs.add(x, prec(f.name, x.name()));
        tie = mul(ls, rs, MulMode::strict, true, eq_ac, gt_rec);
      } else {
        tie = mul(all(S), all(T), MulMode::strict, true, eq_ac, gt_rec);
      }
      cases.emplace_back("3c", and_({eqw, equal_f, tie}));
    }
  }

  struct Job {
    std::size_t k;
    Term s, t;
  };

  OrderId id_;
  std::vector<Symbol> syms_;
  std::map<std::string, std::size_t> index_;
  std::vector<Rule> rules_;
  std::unordered_map<std::pair<Term, Term>, std::size_t, PairHash> gidx_;
  std::vector<std::pair<Term, Term>> pairs_;
  std::vector<Job> work_;
  std::vector<std::string> bools_;
  std::vector<Formula> constraints_;
  std::size_t mul_count_ = 0;
};

} // namespace

std::string export_constraints(OrderId id, const Trs &trs) {
  if (id != OrderId::s && id != OrderId::kv && id != OrderId::kv_prime && id != OrderId::ackbo)
    throw ConfigError("constraint export supports S, KV, KV_PRIME and ACKBO, not " + std::string(to_string(id)));
  return Encoder(id, trs).run();
}

OrderParams decode_model(std::string_view model, const Trs &trs) {
  Signature sig = trs.signature;
  for (const Rule &r : trs.rules) {
    sig.add_symbols_of(r.lhs);
    sig.add_symbols_of(r.rhs);
  }
  const auto syms = sig.symbols();
  OrderParams params;
  for (const Symbol &f : syms)
    params.weights.w[f.name] = 0;
  auto symbol_at = [&](const std::string &digits) -> const std::string * {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      return nullptr;
    const std::size_t i = std::stoul(digits);
    return i < syms.size() ? &syms[i].name : nullptr;
  };

  std::istringstream in{std::string(model)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = line.find(';'); c != std::string::npos)
      line.erase(c);
    std::istringstream ls(line);
    std::string name, value;
    if (!(ls >> name))
      continue;
    if (!(ls >> value))
      throw ConfigError("model line " + std::to_string(lineno) + ": missing value for '" + name + "'");
    if (value == "=" || value == "->") {
      if (!(ls >> value))
        throw ConfigError("model line " + std::to_string(lineno) + ": missing value for '" + name + "'");
    }
    auto as_int = [&] {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used != value.size())
          throw std::invalid_argument(value);
        return static_cast<std::int64_t>(v);
      } catch (const std::exception &) {
        throw ConfigError("model line " + std::to_string(lineno) + ": expected an integer for '" + name + "'");
      }
    };
    if (name == "w0") {
      params.weights.w0 = as_int();
    } else if (name.rfind("w_", 0) == 0) {
      if (const std::string *f = symbol_at(name.substr(2)))
        params.weights.w[*f] = as_int();
    } else if (name.rfind("p_", 0) == 0) {
      const auto us = name.find('_', 2);
      if (us == std::string::npos)
        continue;
      const std::string *f = symbol_at(name.substr(2, us - 2));
      const std::string *g = symbol_at(name.substr(us + 1));
      if (!f || !g)
        continue;
      if (value != "true" && value != "false")
        throw ConfigError("model line " + std::to_string(lineno) + ": expected a boolean for '" + name + "'");
      if (value == "true")
        params.precedence.add(*f, *g);
    }
  }
  return params;
}

} // namespace ackbo
