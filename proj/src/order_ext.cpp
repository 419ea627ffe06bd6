#include "ackbo/order_ext.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ackbo {

namespace {

ExtVerdict mul_cancel(const OrderPairOracle &o, std::span<const Term> m, std::span<const Term> n,
                      MulWitness *witness) {
  std::vector<bool> m_used(m.size(), false), n_used(n.size(), false);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < n.size(); ++j) {
      if (n_used[j])
        continue;
      if (o.geq(m[i], n[j]) && !o.gt(m[i], n[j])) {
        m_used[i] = n_used[j] = true;
        if (witness)
          witness->matched.emplace_back(i, j);
        break;
      }
    }
  }
  bool m_left = false;
  for (bool u : m_used)
    m_left = m_left || !u;
  bool n_left = false;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n_used[j])
      continue;
    n_left = true;
    bool covered = false;
    for (std::size_t i = 0; i < m.size() && !covered; ++i) {
      if (!m_used[i] && o.gt(m[i], n[j])) {
        covered = true;
        if (witness)
          witness->covering.emplace_back(i, j);
      }
    }
    if (!covered)
      return ExtVerdict::none;
  }
  if (m_left)
    return ExtVerdict::strict;
  return n_left ? ExtVerdict::none : ExtVerdict::weak;
}

// Exhaustive search: each element of N is either matched (geq) with a
// private element of M or covered (gt) by an element of M that stays free.
class MulSearch {
public:
  MulSearch(const OrderPairOracle &o, std::span<const Term> m, std::span<const Term> n)
      : m_(m.size()), n_(n.size()), geq_(m_ * n_), gt_(m_ * n_) {
    if (m_ > 64)
      throw std::length_error("multiset comparison limited to 64 elements on the left");
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        gt_[i * n_ + j] = o.gt(m[i], n[j]);
        geq_[i * n_ + j] = gt_[i * n_ + j] || o.geq(m[i], n[j]);
      }
  }

  ExtVerdict run() { return visit(0, 0, 0); }

private:
  struct Key {
    std::size_t j;
    std::uint64_t matched, free;
    bool operator==(const Key &) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key &k) const noexcept {
      return std::hash<std::uint64_t>{}(k.matched * 0x9e3779b97f4a7c15ULL ^ k.free) ^ (k.j << 1);
    }
  };

  ExtVerdict visit(std::size_t j, std::uint64_t matched, std::uint64_t free) {
    if (j == n_) {
      const auto unmatched = static_cast<std::size_t>(m_ - std::popcount(matched));
      return unmatched > 0 ? ExtVerdict::strict : ExtVerdict::weak;
    }
    Key key{j, matched, free};
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    ExtVerdict best = ExtVerdict::none;
    for (std::size_t i = 0; i < m_ && best != ExtVerdict::strict; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (matched & bit)
        continue;
      if (gt_[i * n_ + j]) {
        ExtVerdict v = visit(j + 1, matched, free | bit);
        if (v > best)
          best = v;
      }
      if (best != ExtVerdict::strict && !(free & bit) && geq_[i * n_ + j]) {
        ExtVerdict v = visit(j + 1, matched | bit, free);
        if (v > best)
          best = v;
      }
    }
    memo_.emplace(key, best);
    return best;
  }

  std::size_t m_, n_;
  std::vector<bool> geq_, gt_;
  std::unordered_map<Key, ExtVerdict, KeyHash> memo_;
};

} // namespace

ExtVerdict lex_ext(const OrderPairOracle &o, std::span<const Term> xs, std::span<const Term> ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("lexicographic comparison of tuples of lengths " + std::to_string(xs.size()) +
                                " and " + std::to_string(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (o.gt(xs[i], ys[i]))
      return ExtVerdict::strict;
    if (!o.geq(xs[i], ys[i]))
      return ExtVerdict::none;
  }
  return ExtVerdict::weak;
}

ExtVerdict mul_ext(const OrderPairOracle &o, std::span<const Term> m, std::span<const Term> n,
                   MulWitness *witness) {
  if (o.equiv_symmetric)
    return mul_cancel(o, m, n, witness);
  return MulSearch(o, m, n).run();
}

Multiset restrict_vars(std::span<const Term> s) {
  Multiset out;
  for (const Term &t : s)
    if (t.is_var())
      out.push_back(t);
  return out;
}

Multiset restrict_root(std::span<const Term> s, const Precedence &p, const Symbol &f, RootRel rel) {
  Multiset out;
  for (const Term &t : s) {
    if (t.is_var())
      continue;
    bool keep = false;
    switch (rel) {
    case RootRel::not_less: keep = !p.greater(f.name, t.name()); break;
    case RootRel::less: keep = p.greater(f.name, t.name()); break;
    case RootRel::greater: keep = p.greater(t.name(), f.name); break;
    }
    if (keep)
      out.push_back(t);
  }
  return out;
}

std::pair<Multiset, Multiset> f_sides(std::span<const Term> s, std::span<const Term> t, const Symbol &f,
                                      const Precedence &p) {
  if (!f.ac)
    throw TermError("f-restricted comparison requires an AC symbol, got '" + f.name + "'");
  Multiset lhs = restrict_root(s, p, f, RootRel::not_less);
  Multiset rhs = restrict_root(t, p, f, RootRel::not_less);
  for (Term &x : multiset_difference(restrict_vars(t), restrict_vars(s)))
    rhs.push_back(std::move(x));
  return {std::move(lhs), std::move(rhs)};
}

ExtVerdict cmp_f(const OrderPairOracle &o, std::span<const Term> s, std::span<const Term> t, const Symbol &f,
                 const Precedence &p) {
  auto [lhs, rhs] = f_sides(s, t, f, p);
  return mul_ext(o, lhs, rhs);
}

} // namespace ackbo
