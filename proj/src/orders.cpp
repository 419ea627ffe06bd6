#include "ackbo/orders.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "ackbo/order_ext.hpp"

namespace ackbo {

namespace {

enum class Case : std::uint8_t {
  none,
  weight,
  c0,
  c1,
  c2,
  c3,
  c3a,
  c3b,
  c3c,
  r0,
  r1,
  r2lex,
  r2mul,
  r3,
  r4a,
  r4b,
  r4c,
  r4pa,
  r4pb,
  r4pc,
};

std::string label_of(Case c) {
  switch (c) {
  case Case::none: return "none";
  case Case::weight: return "weight";
  case Case::c0:
  case Case::r0: return "case 0";
  case Case::c1:
  case Case::r1: return "case 1";
  case Case::c2: return "case 2";
  case Case::c3:
  case Case::r3: return "case 3";
  case Case::c3a: return "case 3(a)";
  case Case::c3b: return "case 3(b)";
  case Case::c3c: return "case 3(c)";
  case Case::r2lex: return "case 2(a)";
  case Case::r2mul: return "case 2(b)";
  case Case::r4a: return "case 4(a)";
  case Case::r4b: return "case 4(b)";
  case Case::r4c: return "case 4(c)";
  case Case::r4pa: return "case 4'(a)";
  case Case::r4pb: return "case 4'(b)";
  case Case::r4pc: return "case 4'(c)";
  }
  return "none";
}

struct PairKey {
  Term s, t;
  bool operator==(const PairKey &) const = default;
};

struct PairHash {
  std::size_t operator()(const PairKey &k) const noexcept {
    return k.s.hash() * 0x9e3779b97f4a7c15ULL ^ (k.t.hash() + 0x632be59bd9b4e019ULL);
  }
};

// Variable coefficients of a term, sorted by name.
using Counts = std::vector<std::pair<std::string, std::int64_t>>;

bool dominates(const Counts &s, const Counts &t) {
  auto it = s.begin();
  for (const auto &[x, c] : t) {
    while (it != s.end() && it->first < x)
      ++it;
    if (it == s.end() || it->first != x || it->second < c)
      return false;
  }
  return true;
}

template <class Greater> std::vector<Term> embeddings(const Symbol &f, const Term &t, Greater &&greater) {
  const Multiset tf = top_flatten(f, t);
  std::vector<Term> out;
  for (std::size_t i = 0; i < tf.size(); ++i) {
    const Term &e = tf[i];
    if (e.is_var() || !greater(f.name, e.name()))
      continue;
    for (const Term &a : e.args()) {
      Multiset elems = tf;
      elems[i] = a;
      out.push_back(ac_canonical(make_comb(f, elems)));
    }
  }
  std::sort(out.begin(), out.end(), TermLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_power_of(const Term &s, const Term &x) {
  if (s.is_var() || s.args().size() != 1)
    return false;
  const Symbol &f = s.symbol();
  const Term *cur = &s;
  while (cur->is_app() && cur->symbol() == f)
    cur = &cur->arg(0);
  return *cur == x;
}

void check_symbols(const Term &t, const Signature &sig) {
  if (t.is_var())
    return;
  auto found = sig.find(t.name());
  if (!found || *found != t.symbol())
    throw ConfigError("symbol '" + t.name() + "' is not part of the configured signature");
  for (const Term &a : t.args())
    check_symbols(a, sig);
}

} // namespace

std::string_view to_string(OrderId id) {
  switch (id) {
  case OrderId::s: return "S";
  case OrderId::kv_ground: return "KV_GROUND";
  case OrderId::kv: return "KV";
  case OrderId::kv_prime: return "KV_PRIME";
  case OrderId::ackbo: return "ACKBO";
  case OrderId::ackbo_sc: return "ACKBO_SC";
  case OrderId::acrpo: return "ACRPO";
  case OrderId::acrpo_prime: return "ACRPO_PRIME";
  }
  return "?";
}

std::optional<OrderId> parse_order_id(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_')
      continue;
    key += c == '\'' ? 'p' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  static const std::pair<std::string_view, OrderId> table[] = {
      {"s", OrderId::s},
      {"kvground", OrderId::kv_ground},
      {"kv", OrderId::kv},
      {"kvprime", OrderId::kv_prime},
      {"kvp", OrderId::kv_prime},
      {"ackbo", OrderId::ackbo},
      {"ackbosc", OrderId::ackbo_sc},
      {"acrpo", OrderId::acrpo},
      {"acrpoprime", OrderId::acrpo_prime},
      {"acrpop", OrderId::acrpo_prime},
  };
  for (const auto &[k, id] : table)
    if (k == key)
      return id;
  return std::nullopt;
}

bool is_kbo_family(OrderId id) { return id != OrderId::acrpo && id != OrderId::acrpo_prime; }

std::string_view to_string(Relation r) {
  switch (r) {
  case Relation::gt: return "GT";
  case Relation::ac_equal: return "AC_EQUAL";
  case Relation::none: return "NONE";
  }
  return "?";
}

void validate(OrderId id, const OrderParams &params, const Signature &sig) {
  const std::string who(to_string(id));
  const auto syms = sig.symbols();
  if (is_kbo_family(id)) {
    if (auto msg = admissibility_violation(params.precedence, params.weights, sig); !msg.empty())
      throw ConfigError(who + ": weight function not admissible: " + msg);
    if (id != OrderId::ackbo_sc && params.weights.has_nontrivial_sc())
      throw ConfigError(who + ": subterm coefficients other than 1 need ACKBO_SC");
    for (const Symbol &f : syms)
      if (f.ac && (params.weights.coeff(f.name, 1) != 1 || params.weights.coeff(f.name, 2) != 1))
        throw ConfigError(who + ": AC symbol '" + f.name + "' must have subterm coefficients 1");
    if (id == OrderId::s)
      for (const Symbol &f : syms)
        if (f.ac && !params.precedence.minimal(f.name))
          throw ConfigError(who + ": AC symbol '" + f.name + "' must be minimal in the precedence");
  }
  if (id == OrderId::acrpo_prime) {
    std::vector<std::string> names;
    for (const Symbol &f : syms)
      names.push_back(f.name);
    if (!params.precedence.total_on(names))
      throw ConfigError(who + ": precedence must be total on the signature");
  }
}

struct Comparator::Impl {
  OrderId id;
  OrderParams params;
  Signature sig;
  bool use_sc;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<char> prec;
  std::unordered_map<Term, std::int64_t, TermHash> weights;
  std::unordered_map<Term, Counts, TermHash> counts;
  std::unordered_map<Term, std::vector<Term>, TermHash> embs;
  std::unordered_map<PairKey, Case, PairHash> memo;
  OrderPairOracle ac_pair, wroot_pair, kvp_pair;

  Impl(OrderId i, OrderParams p, Signature s) : id(i), params(std::move(p)), sig(std::move(s)) {
    validate(id, params, sig);
    use_sc = id == OrderId::ackbo_sc && params.weights.has_nontrivial_sc();
    const auto syms = sig.symbols();
    for (std::size_t k = 0; k < syms.size(); ++k)
      index.emplace(syms[k].name, k);
    prec.assign(syms.size() * syms.size(), 0);
    for (const auto &[f, g] : params.precedence.pairs()) {
      auto a = index.find(f), b = index.find(g);
      if (a != index.end() && b != index.end())
        prec[a->second * syms.size() + b->second] = 1;
    }
    ac_pair = {[](const Term &a, const Term &b) { return a == b; },
               [this](const Term &a, const Term &b) { return gt(a, b); }, true};
    wroot_pair = {[this](const Term &a, const Term &b) { return weq(a, b); },
                  [this](const Term &a, const Term &b) { return wgt(a, b); }, true};
    kvp_pair = {[this](const Term &a, const Term &b) { return kvgeq(a, b); },
                [this](const Term &a, const Term &b) { return wgt(a, b); }, false};
  }

  bool pgt(const std::string &f, const std::string &g) const {
    auto a = index.find(f), b = index.find(g);
    if (a == index.end() || b == index.end())
      return params.precedence.greater(f, g);
    return prec[a->second * index.size() + b->second] != 0;
  }

  std::int64_t coeff(const Term &t, std::size_t i) const {
    return use_sc ? params.weights.coeff(t.name(), i + 1) : 1;
  }

  std::int64_t w(const Term &t) {
    if (t.is_var())
      return params.weights.w0;
    if (auto it = weights.find(t); it != weights.end())
      return it->second;
    std::int64_t total = params.weights.of(t.name());
    for (std::size_t i = 0; i < t.args().size(); ++i)
      total += coeff(t, i) * w(t.arg(i));
    weights.emplace(t, total);
    return total;
  }

  const Counts &vcs(const Term &t) {
    if (auto it = counts.find(t); it != counts.end())
      return it->second;
    Counts out;
    if (t.is_var()) {
      out.emplace_back(t.name(), 1);
    } else if (!t.is_ground()) {
      std::map<std::string, std::int64_t> acc;
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        const std::int64_t k = coeff(t, i);
        for (const auto &[x, c] : vcs(t.arg(i)))
          acc[x] += k * c;
      }
      out.assign(acc.begin(), acc.end());
    }
    return counts.emplace(t, std::move(out)).first->second;
  }

  bool varcond(const Term &s, const Term &t) { return t.is_ground() || dominates(vcs(s), vcs(t)); }

  // =_{w,root}, >_{w,root} and >=kv'.
  bool weq(const Term &a, const Term &b) {
    if (a.is_var() || b.is_var())
      return a == b;
    return a.symbol() == b.symbol() && w(a) == w(b) && vcs(a) == vcs(b);
  }
  bool wgt(const Term &a, const Term &b) {
    if (!varcond(a, b))
      return false;
    const std::int64_t wa = w(a), wb = w(b);
    return wa > wb || (wa == wb && a.is_app() && b.is_app() && pgt(a.name(), b.name()));
  }
  bool kvgeq(const Term &a, const Term &b) {
    if (!varcond(a, b))
      return false;
    const std::int64_t wa = w(a), wb = w(b);
    if (wa != wb)
      return wa > wb;
    if (b.is_var())
      return true;
    return a.is_app() && (a.symbol() == b.symbol() || pgt(a.name(), b.name()));
  }

  Multiset restrict(std::span<const Term> m, const Symbol &f, RootRel rel) const {
    Multiset out;
    for (const Term &t : m) {
      if (t.is_var())
        continue;
      bool keep = false;
      switch (rel) {
      case RootRel::not_less: keep = !pgt(f.name, t.name()); break;
      case RootRel::less: keep = pgt(f.name, t.name()); break;
      case RootRel::greater: keep = pgt(t.name(), f.name); break;
      }
      if (keep)
        out.push_back(t);
    }
    return out;
  }

  std::pair<Multiset, Multiset> sides(const Multiset &s, const Multiset &t, const Symbol &f) const {
    Multiset lhs = restrict(s, f, RootRel::not_less);
    Multiset rhs = restrict(t, f, RootRel::not_less);
    for (Term &x : multiset_difference(restrict_vars(t), restrict_vars(s)))
      rhs.push_back(std::move(x));
    return {std::move(lhs), std::move(rhs)};
  }

  const std::vector<Term> &emb(const Symbol &f, const Term &t) {
    if (auto it = embs.find(t); it != embs.end())
      return it->second;
    auto out = embeddings(f, t, [this](const std::string &a, const std::string &b) { return pgt(a, b); });
    return embs.emplace(t, std::move(out)).first->second;
  }

  bool strict(const Multiset &m, const Multiset &n) { return mul_ext(ac_pair, m, n) == ExtVerdict::strict; }

  Case gt_case(const Term &s, const Term &t) {
    if (s.is_var() || s == t)
      return Case::none;
    PairKey key{s, t};
    if (auto it = memo.find(key); it != memo.end())
      return it->second;
    const Case c = is_kbo_family(id) ? kbo(s, t) : rpo(s, t);
    memo.emplace(std::move(key), c);
    return c;
  }

  bool gt(const Term &s, const Term &t) { return gt_case(s, t) != Case::none; }

  Case kbo(const Term &s, const Term &t) {
    const bool ground = id == OrderId::kv_ground;
    if (!ground && !varcond(s, t))
      return Case::none;
    const std::int64_t ws = w(s), wt = w(t);
    if (ws != wt)
      return ws > wt ? Case::weight : Case::none;
    if (t.is_var())
      return !ground && is_power_of(s, t) ? Case::c0 : Case::none;
    if (pgt(s.name(), t.name()))
      return Case::c1;
    if (s.symbol() != t.symbol())
      return Case::none;
    const Symbol &f = s.symbol();
    if (!f.ac)
      return lex_ext(ac_pair, s.args(), t.args()) == ExtVerdict::strict ? Case::c2 : Case::none;

    const Multiset S = top_flatten(f, s), T = top_flatten(f, t);
    if (id == OrderId::s)
      return strict(S, T) ? Case::c3 : Case::none;

    auto [l, r] = sides(S, T, f);
    const OrderPairOracle &pair = id == OrderId::kv_prime                         ? kvp_pair
                                  : id == OrderId::ackbo || id == OrderId::ackbo_sc ? ac_pair
                                                                                    : wroot_pair;
    const ExtVerdict v = mul_ext(pair, l, r);
    if (v == ExtVerdict::strict)
      return Case::c3a;
    if (v == ExtVerdict::none)
      return Case::none;
    if (S.size() > T.size())
      return Case::c3b;
    if (S.size() < T.size())
      return Case::none;
    if (id == OrderId::ackbo || id == OrderId::ackbo_sc)
      return strict(restrict(S, f, RootRel::less), restrict(T, f, RootRel::less)) ? Case::c3c : Case::none;
    return strict(S, T) ? Case::c3c : Case::none;
  }

  Case rpo(const Term &s, const Term &t) {
    // Var(t) is contained in Var(s) whenever s > t; checking it first is cheap.
    if (!t.is_ground()) {
      const Counts &cs = vcs(s);
      for (const auto &[x, c] : vcs(t))
        if (!std::binary_search(cs.begin(), cs.end(), std::pair<std::string, std::int64_t>(x, 0),
                                [](const auto &a, const auto &b) { return a.first < b.first; }))
          return Case::none;
    }
    const Symbol &f = s.symbol();
    const Multiset args = f.ac ? top_flatten(f, s) : Multiset(s.args().begin(), s.args().end());
    for (const Term &a : args)
      if (a == t || gt(a, t))
        return Case::r0;
    if (t.is_var())
      return Case::none;

    auto above_all = [&] {
      return std::all_of(t.args().begin(), t.args().end(), [&](const Term &u) { return gt(s, u); });
    };
    if (pgt(f.name, t.name()))
      return above_all() ? Case::r1 : Case::none;
    if (f != t.symbol())
      return Case::none;
    if (!f.ac) {
      if (!above_all())
        return Case::none;
      if (params.status_of(f.name) == Status::mul)
        return strict(args, Multiset(t.args().begin(), t.args().end())) ? Case::r2mul : Case::none;
      return lex_ext(ac_pair, s.args(), t.args()) == ExtVerdict::strict ? Case::r2lex : Case::none;
    }

    for (const Term &u : emb(f, s))
      if (u == t || gt(u, t))
        return Case::r3;

    const Multiset T = top_flatten(f, t);
    const Case c = id == OrderId::acrpo ? rpo4(args, T, f) : rpo4prime(args, T, f);
    if (c == Case::none)
      return c;
    for (const Term &u : emb(f, t))
      if (!gt(s, u))
        return Case::none;
    return c;
  }

  Case rpo4(const Multiset &S, const Multiset &T, const Symbol &f) {
    auto [l, r] = sides(S, T, f);
    const ExtVerdict v = mul_ext(ac_pair, l, r);
    if (v == ExtVerdict::strict)
      return Case::r4a;
    if (v == ExtVerdict::none)
      return Case::none;
    if (S.size() > T.size())
      return Case::r4b;
    if (S.size() == T.size() && strict(restrict(S, f, RootRel::less), restrict(T, f, RootRel::less)))
      return Case::r4c;
    return Case::none;
  }

  Case rpo4prime(const Multiset &S, const Multiset &T, const Symbol &f) {
    const Multiset sg = restrict(S, f, RootRel::greater), tg = restrict(T, f, RootRel::greater);
    Multiset l = sg, r = tg;
    for (Term &x : restrict_vars(S))
      l.push_back(std::move(x));
    for (Term &x : restrict_vars(T))
      r.push_back(std::move(x));
    if (mul_ext(ac_pair, l, r) == ExtVerdict::none)
      return Case::none;
    if (strict(sg, tg))
      return Case::r4pa;
    const LinPoly ps = count_poly(S), pt = count_poly(T);
    if (poly_gt(ps, pt))
      return Case::r4pb;
    if (poly_ge(ps, pt) && strict(S, T))
      return Case::r4pc;
    return Case::none;
  }

  // Trace reconstruction. Every pair is explained at most once.
  void explain(const Term &s, const Term &t, std::vector<TraceStep> &out,
               std::unordered_set<PairKey, PairHash> &seen) {
    if (!seen.insert(PairKey{s, t}).second)
      return;
    const Case c = gt_case(s, t);
    if (c == Case::none)
      return;
    out.push_back({s, t, label_of(c)});
    auto covering = [&](const Multiset &m, const Multiset &n) {
      MulWitness wit;
      if (mul_ext(ac_pair, m, n, &wit) == ExtVerdict::none)
        return;
      for (const auto &[i, j] : wit.covering)
        explain(m[i], n[j], out, seen);
    };
    auto first_lex = [&] {
      for (std::size_t i = 0; i < s.args().size(); ++i)
        if (s.arg(i) != t.arg(i)) {
          explain(s.arg(i), t.arg(i), out, seen);
          return;
        }
    };
    const bool ac = s.is_app() && s.symbol().ac;
    const Symbol f = s.is_app() ? s.symbol() : Symbol();
    const Multiset S = ac ? top_flatten(f, s) : Multiset{}, T = ac ? top_flatten(f, t) : Multiset{};
    switch (c) {
    case Case::c2:
    case Case::r2lex: first_lex(); break;
    case Case::r2mul: covering({s.args().begin(), s.args().end()}, {t.args().begin(), t.args().end()}); break;
    case Case::c3:
    case Case::r4pc: covering(S, T); break;
    case Case::c3a:
    case Case::r4a:
      if (id == OrderId::ackbo || id == OrderId::ackbo_sc || id == OrderId::acrpo) {
        auto [l, r] = sides(S, T, f);
        covering(l, r);
      }
      break;
    case Case::c3c:
    case Case::r4c:
      if (id == OrderId::kv || id == OrderId::kv_ground || id == OrderId::kv_prime)
        covering(S, T);
      else
        covering(restrict(S, f, RootRel::less), restrict(T, f, RootRel::less));
      break;
    case Case::r4pa: covering(restrict(S, f, RootRel::greater), restrict(T, f, RootRel::greater)); break;
    case Case::r0: {
      const Multiset args = ac ? S : Multiset(s.args().begin(), s.args().end());
      for (const Term &a : args) {
        if (a == t)
          break;
        if (gt(a, t)) {
          explain(a, t, out, seen);
          break;
        }
      }
      break;
    }
    case Case::r1:
      for (const Term &u : t.args())
        explain(s, u, out, seen);
      break;
    case Case::r3:
      for (const Term &u : emb(f, s)) {
        if (u == t)
          break;
        if (gt(u, t)) {
          explain(u, t, out, seen);
          break;
        }
      }
      break;
    default: break;
    }
  }

  Term prepare(const Term &t) const {
    check_symbols(t, sig);
    if (id == OrderId::kv_ground && !t.is_ground())
      throw ConfigError("KV_GROUND compares ground terms only, got " + to_string(t));
    return ac_canonical(t);
  }
};

Comparator::Comparator(OrderId id, OrderParams params, Signature sig)
    : impl_(std::make_unique<Impl>(id, std::move(params), std::move(sig))) {}
Comparator::~Comparator() = default;
Comparator::Comparator(Comparator &&) noexcept = default;
Comparator &Comparator::operator=(Comparator &&) noexcept = default;

Verdict Comparator::compare(const Term &s, const Term &t) {
  const Term cs = impl_->prepare(s), ct = impl_->prepare(t);
  Verdict v;
  if (cs == ct) {
    v.relation = Relation::ac_equal;
    return v;
  }
  if (!impl_->gt(cs, ct))
    return v;
  v.relation = Relation::gt;
  std::unordered_set<PairKey, PairHash> seen;
  impl_->explain(cs, ct, v.trace, seen);
  return v;
}

bool Comparator::greater(const Term &s, const Term &t) {
  return impl_->gt(impl_->prepare(s), impl_->prepare(t));
}

OrderId Comparator::id() const { return impl_->id; }
const OrderParams &Comparator::params() const { return impl_->params; }

Verdict compare(OrderId id, const OrderParams &params, const Term &s, const Term &t) {
  Signature sig;
  sig.add_symbols_of(s);
  sig.add_symbols_of(t);
  return Comparator(id, params, std::move(sig)).compare(s, t);
}

bool wroot_eq(const OrderParams &params, const Term &s, const Term &t) {
  if (s.is_var() || t.is_var())
    return s == t;
  return s.symbol() == t.symbol() && weight(s, params.weights) == weight(t, params.weights) &&
         var_counts(s) == var_counts(t);
}

bool wroot_gt(const OrderParams &params, const Term &s, const Term &t) {
  if (!var_condition(s, t))
    return false;
  const std::int64_t ws = weight(s, params.weights), wt = weight(t, params.weights);
  return ws > wt || (ws == wt && s.is_app() && t.is_app() && params.precedence.greater(s.name(), t.name()));
}

bool kvprime_geq(const OrderParams &params, const Term &s, const Term &t) {
  if (!var_condition(s, t))
    return false;
  const std::int64_t ws = weight(s, params.weights), wt = weight(t, params.weights);
  if (ws != wt)
    return ws > wt;
  if (t.is_var())
    return true;
  return s.is_app() && (s.symbol() == t.symbol() || params.precedence.greater(s.name(), t.name()));
}

std::vector<Term> emb_candidates(const Symbol &f, const OrderParams &params, const Term &t) {
  return embeddings(f, ac_canonical(t), [&](const std::string &a, const std::string &b) {
    return params.precedence.greater(a, b);
  });
}

LinPoly count_poly(std::span<const Term> s) {
  LinPoly p;
  for (const Term &t : s) {
    if (t.is_var())
      ++p.coeffs[t.name()];
    else
      ++p.constant;
  }
  return p;
}

namespace {

// Minimum of p - q over positive integer assignments, or nullopt when unbounded below.
std::optional<std::int64_t> min_difference(const LinPoly &p, const LinPoly &q) {
  std::map<std::string, std::int64_t> diff = p.coeffs;
  for (const auto &[x, c] : q.coeffs)
    diff[x] -= c;
  std::int64_t at_ones = p.constant - q.constant;
  for (const auto &[x, d] : diff) {
    if (d < 0)
      return std::nullopt;
    at_ones += d;
  }
  return at_ones;
}

} // namespace

bool poly_ge(const LinPoly &p, const LinPoly &q) {
  auto m = min_difference(p, q);
  return m && *m >= 0;
}

bool poly_gt(const LinPoly &p, const LinPoly &q) {
  auto m = min_difference(p, q);
  return m && *m > 0;
}

std::string to_string(const LinPoly &p) {
  std::string out;
  for (const auto &[x, c] : p.coeffs) {
    if (c == 0)
      continue;
    if (!out.empty())
      out += " + ";
    out += c == 1 ? x : std::to_string(c) + x;
  }
  if (p.constant != 0 || out.empty()) {
    if (!out.empty())
      out += " + ";
    out += std::to_string(p.constant);
  }
  return out;
}

} // namespace ackbo
