#include "ackbo/orient.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

namespace ackbo {

std::string_view to_string(OrientStatus s) {
  switch (s) {
  case OrientStatus::oriented: return "ORIENTED";
  case OrientStatus::not_orientable_within_bounds: return "NOT_ORIENTABLE_WITHIN_BOUNDS";
  case OrientStatus::unknown_within_bounds: return "UNKNOWN_WITHIN_BOUNDS";
  }
  return "?";
}

std::vector<Verdict> orient_check(OrderId id, const OrderParams &params, const Trs &trs) {
  Signature sig = trs.signature;
  for (const Rule &r : trs.rules) {
    sig.add_symbols_of(r.lhs);
    sig.add_symbols_of(r.rhs);
  }
  Comparator cmp(id, params, std::move(sig));
  std::vector<Verdict> out;
  out.reserve(trs.rules.size());
  for (const Rule &r : trs.rules)
    out.push_back(cmp.compare(r.lhs, r.rhs));
  return out;
}

namespace {

class PosetGen {
public:
  PosetGen(std::size_t n, const std::function<bool(std::uint64_t)> &visit) : n_(n), visit_(visit) {}

  void run() {
    const std::size_t max_pairs = n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2;
    for (target_ = 0; target_ <= max_pairs && !stop_; ++target_) {
      below_.fill(0);
      above_.fill(0);
      extend(0, 0, 0);
    }
  }

private:
  void extend(std::size_t i, std::uint64_t mask, std::size_t count) {
    if (stop_)
      return;
    if (i == n_) {
      if (count == target_)
        stop_ = !visit_(mask);
      return;
    }
    const unsigned all = (1u << i) - 1;
    for (unsigned down = 0; down <= all; ++down) {
      const std::size_t nd = std::popcount(down);
      if (count + nd > target_)
        continue;
      if (!closed(down, below_))
        continue;
      const unsigned rest = all & ~down;
      // Submasks of rest, including the empty set.
      for (unsigned up = rest;; up = (up - 1) & rest) {
        const std::size_t nu = std::popcount(up);
        if (count + nd + nu <= target_ && closed(up, above_) && crosses(up, down)) {
          const auto saved_below = below_, saved_above = above_;
          std::uint64_t m = mask;
          below_[i] = down;
          above_[i] = up;
          for (std::size_t d = 0; d < i; ++d)
            if (down >> d & 1u) {
              above_[d] |= 1u << i;
              m |= std::uint64_t{1} << (i * n_ + d);
            }
          for (std::size_t u = 0; u < i; ++u)
            if (up >> u & 1u) {
              below_[u] |= 1u << i;
              m |= std::uint64_t{1} << (u * n_ + i);
            }
          extend(i + 1, m, count + nd + nu);
          below_ = saved_below;
          above_ = saved_above;
          if (stop_)
            return;
        }
        if (up == 0)
          break;
      }
    }
  }

  static bool closed(unsigned set, const std::array<unsigned, 8> &rel) {
    for (std::size_t e = 0; e < 8; ++e)
      if ((set >> e & 1u) && (rel[e] & ~set))
        return false;
    return true;
  }

  bool crosses(unsigned up, unsigned down) const {
    for (std::size_t u = 0; u < n_; ++u)
      if ((up >> u & 1u) && (below_[u] & down) != down)
        return false;
    return true;
  }

  std::size_t n_;
  const std::function<bool(std::uint64_t)> &visit_;
  std::size_t target_ = 0;
  bool stop_ = false;
  std::array<unsigned, 8> below_{}, above_{};
};

// Weight of a term as a linear form over (w0, w_1..w_n) for fixed subterm coefficients.
void linear_form(const Term &t, std::int64_t factor, const std::map<std::string, std::size_t> &index,
                 const std::map<std::pair<std::string, std::size_t>, std::int64_t> &sc,
                 std::vector<std::int64_t> &out) {
  if (t.is_var()) {
    out[0] += factor;
    return;
  }
  out[1 + index.at(t.name())] += factor;
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    auto it = sc.find({t.name(), i + 1});
    const std::int64_t k = it == sc.end() ? 1 : it->second;
    linear_form(t.arg(i), factor * k, index, sc, out);
  }
}

struct WeightCandidate {
  std::int64_t w0;
  std::vector<std::int64_t> w;
  std::size_t sc_choice;
};

class Searcher {
public:
  Searcher(OrderId id, const Trs &trs, const SearchConfig &cfg)
      : id_(id), cfg_(cfg), start_(std::chrono::steady_clock::now()),
        deadline_(start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(cfg.time_budget))) {
    for (const Rule &r : trs.rules) {
      sig_.add_symbols_of(r.lhs);
      sig_.add_symbols_of(r.rhs);
    }
    for (const Symbol &s : trs.signature.symbols())
      sig_.add(s);
    syms_ = sig_.symbols();
    for (std::size_t i = 0; i < syms_.size(); ++i) {
      names_.push_back(syms_[i].name);
      index_.emplace(syms_[i].name, i);
    }
    for (const Rule &r : trs.rules)
      rules_.push_back({ac_canonical(r.lhs), ac_canonical(r.rhs)});
  }

  OrientResult run() {
    OrientResult res;
    if (cfg_.max_weight < 1 || cfg_.max_sc < 1)
      throw ConfigError("search bounds must be positive");
    const std::size_t n = syms_.size();
    if (cfg_.mode == PrecedenceMode::partial && n > 8)
      throw ConfigError("partial precedence enumeration is limited to 8 symbols, got " + std::to_string(n));
    if (cfg_.mode == PrecedenceMode::total && n > 8)
      throw ConfigError("total precedence enumeration is limited to 8 symbols, got " + std::to_string(n));
    if (id_ == OrderId::kv_ground)
      for (const Rule &r : rules_)
        if (!r.lhs.is_ground() || !r.rhs.is_ground())
          throw ConfigError("KV_GROUND orients ground systems only");

    if (!structurally_possible()) {
      finish(res);
      return res;
    }
    if (is_kbo_family(id_) && !build_weight_candidates()) {
      res.status = OrientStatus::unknown_within_bounds;
      finish(res);
      return res;
    }

    std::vector<std::uint64_t> batch;
    std::optional<std::pair<std::uint64_t, OrderParams>> found;
    auto flush = [&] {
      found = process(batch);
      batch.clear();
      return !found && !timed_out_;
    };
    auto visit = [&](std::uint64_t mask) {
      ++precedences_;
      batch.push_back(mask);
      return batch.size() < kBatch || flush();
    };
    if (cfg_.mode == PrecedenceMode::fixed) {
      fixed_ = true;
      visit(0);
    } else if (cfg_.mode == PrecedenceMode::total) {
      for_each_total_order(n, visit);
    } else {
      for_each_partial_order(n, visit);
    }
    if (!found && !timed_out_ && !batch.empty())
      flush();

    if (found) {
      res.status = OrientStatus::oriented;
      res.params = found->second;
      res.verdicts = orient_check(id_, res.params, Trs{sig_, rules_});
    } else if (timed_out_) {
      res.status = OrientStatus::unknown_within_bounds;
    }
    finish(res);
    return res;
  }

private:
  static constexpr std::size_t kBatch = 256;

  void finish(OrientResult &res) const {
    res.stats.precedences = precedences_;
    res.stats.candidates = candidates_.load();
    res.stats.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

  // Weight-independent necessary conditions.
  bool structurally_possible() const {
    for (const Rule &r : rules_) {
      if (r.lhs.is_var() || r.lhs == r.rhs)
        return false;
      if (id_ == OrderId::ackbo_sc)
        continue;
      if (is_kbo_family(id_) ? !var_condition(r.lhs, r.rhs) : !std::includes(
                                                                 variables(r.lhs).begin(), variables(r.lhs).end(),
                                                                 variables(r.rhs).begin(), variables(r.rhs).end()))
        return false;
    }
    return true;
  }

  bool build_weight_candidates() {
    const std::size_t n = syms_.size();
    // Subterm coefficient slots: argument positions of non-AC symbols.
    std::vector<std::pair<std::string, std::size_t>> slots;
    if (id_ == OrderId::ackbo_sc)
      for (const Symbol &f : syms_)
        if (!f.ac)
          for (std::size_t i = 1; i <= f.arity; ++i)
            slots.emplace_back(f.name, i);
    std::vector<std::int64_t> digits(slots.size(), 1);
    while (true) {
      std::map<std::pair<std::string, std::size_t>, std::int64_t> sc;
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (digits[k] != 1)
          sc.emplace(slots[k], digits[k]);
      WeightFn probe;
      probe.sc = sc;
      bool ok = true;
      for (const Rule &r : rules_)
        ok = ok && vc_condition(r.lhs, r.rhs, probe);
      if (ok) {
        std::vector<std::vector<std::int64_t>> forms;
        for (const Rule &r : rules_) {
          std::vector<std::int64_t> f(n + 1, 0), g(n + 1, 0);
          linear_form(r.lhs, 1, index_, sc, f);
          linear_form(r.rhs, 1, index_, sc, g);
          for (std::size_t k = 0; k <= n; ++k)
            f[k] -= g[k];
          forms.push_back(std::move(f));
        }
        sc_choices_.push_back(std::move(sc));
        sc_forms_.push_back(std::move(forms));
      }
      std::size_t k = slots.size();
      while (k > 0 && digits[k - 1] == cfg_.max_sc)
        digits[--k] = 1;
      if (k == 0)
        break;
      ++digits[k - 1];
    }
    if (sc_choices_.empty())
      return true;

    // Odometer over (w0, w_1..w_n) in lexicographic order.
    std::vector<std::int64_t> v(n + 1, 0);
    v[0] = 1;
    std::uint64_t steps = 0;
    while (true) {
      if ((++steps & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_)
        return false;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        ok = syms_[i].arity != 0 || v[i + 1] >= v[0];
      if (ok) {
        for (std::size_t c = 0; c < sc_choices_.size(); ++c) {
          bool fits = true;
          for (const auto &form : sc_forms_[c]) {
            const std::int64_t d = std::inner_product(form.begin(), form.end(), v.begin(), std::int64_t{0});
            if (d < 0) {
              fits = false;
              break;
            }
          }
          if (fits)
            weights_.push_back({v[0], {v.begin() + 1, v.end()}, c});
        }
      }
      std::size_t k = n + 1;
      while (k > 0 && v[k - 1] == cfg_.max_weight) {
        --k;
        v[k] = k == 0 ? 1 : 0;
      }
      if (k == 0)
        break;
      ++v[k - 1];
    }
    return true;
  }

  std::uint64_t row(std::size_t i) const {
    const std::size_t n = syms_.size();
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i)
        m |= std::uint64_t{1} << (i * n + j);
    return m;
  }

  Precedence precedence_of(std::uint64_t mask) const {
    return fixed_ ? cfg_.fixed : precedence_from_mask(names_, mask);
  }

  bool expired() {
    if (timed_out_)
      return true;
    if (std::chrono::steady_clock::now() > deadline_)
      timed_out_ = true;
    return timed_out_;
  }

  bool orients(const OrderParams &params) {
    ++candidates_;
    try {
      Comparator cmp(id_, params, sig_);
      for (const Rule &r : rules_)
        if (!cmp.greater(r.lhs, r.rhs))
          return false;
      return true;
    } catch (const ConfigError &) {
      return false;
    }
  }

  std::optional<OrderParams> try_precedence(std::uint64_t mask) {
    const std::size_t n = syms_.size();
    const Precedence prec = precedence_of(mask);
    if (fixed_) {
      mask = 0;
      for (const auto &[f, g] : prec.pairs()) {
        auto a = index_.find(f), b = index_.find(g);
        if (a != index_.end() && b != index_.end())
          mask |= std::uint64_t{1} << (a->second * n + b->second);
      }
    }
    if (id_ == OrderId::s)
      for (std::size_t i = 0; i < n; ++i)
        if (syms_[i].ac && (mask & row(i)))
          return std::nullopt;
    if (id_ == OrderId::acrpo_prime && static_cast<std::size_t>(std::popcount(mask)) != n * (n - (n > 0)) / 2)
      return std::nullopt;

    if (!is_kbo_family(id_)) {
      if (expired())
        return std::nullopt;
      OrderParams params{prec, {}, cfg_.status};
      if (orients(params))
        return params;
      return std::nullopt;
    }

    std::vector<bool> maximal(n);
    for (std::size_t i = 0; i < n; ++i)
      maximal[i] = (mask & row(i)) == row(i);
    for (const WeightCandidate &c : weights_) {
      bool admissible = true;
      for (std::size_t i = 0; i < n && admissible; ++i)
        admissible = !(syms_[i].arity == 1 && c.w[i] == 0 && !maximal[i]);
      if (!admissible)
        continue;
      if (expired())
        return std::nullopt;
      OrderParams params;
      params.precedence = prec;
      params.weights.w0 = c.w0;
      for (std::size_t i = 0; i < n; ++i)
        params.weights.w.emplace(names_[i], c.w[i]);
      params.weights.sc = sc_choices_[c.sc_choice];
      if (orients(params))
        return params;
    }
    return std::nullopt;
  }

  // Tries a batch of precedences in parallel; the witness of the smallest
  // index wins so the outcome does not depend on scheduling.
  std::optional<std::pair<std::uint64_t, OrderParams>> process(const std::vector<std::uint64_t> &batch) {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{batch.size()};
    std::mutex mu;
    std::optional<std::pair<std::size_t, OrderParams>> winner;
    auto work = [&] {
      for (std::size_t i = next++; i < batch.size(); i = next++) {
        if (i > best.load() || timed_out_)
          continue;
        if (auto p = try_precedence(batch[i])) {
          std::lock_guard lock(mu);
          if (!winner || i < winner->first) {
            winner.emplace(i, std::move(*p));
            best = i;
          }
        }
      }
    };
    unsigned threads = cfg_.threads ? cfg_.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, batch.size()));
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(work);
    }
    if (!winner)
      return std::nullopt;
    return std::make_pair(batch[winner->first], std::move(winner->second));
  }

  OrderId id_;
  const SearchConfig &cfg_;
  std::chrono::steady_clock::time_point start_, deadline_;
  Signature sig_;
  std::vector<Symbol> syms_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<Rule> rules_;
  std::vector<std::map<std::pair<std::string, std::size_t>, std::int64_t>> sc_choices_;
  std::vector<std::vector<std::vector<std::int64_t>>> sc_forms_;
  std::vector<WeightCandidate> weights_;
  std::uint64_t precedences_ = 0;
  std::atomic<std::uint64_t> candidates_{0};
  std::atomic<bool> timed_out_{false};
  bool fixed_ = false;
};

} // namespace

void for_each_partial_order(std::size_t n, const std::function<bool(std::uint64_t)> &visit) {
  if (n > 8)
    throw std::length_error("partial orders are enumerated for at most 8 elements");
  PosetGen(n, visit).run();
}

void for_each_total_order(std::size_t n, const std::function<bool(std::uint64_t)> &visit) {
  if (n > 8)
    throw std::length_error("total orders are enumerated for at most 8 elements");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        mask |= std::uint64_t{1} << (perm[i] * n + perm[j]);
    if (!visit(mask))
      return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

Precedence precedence_from_mask(std::span<const std::string> names, std::uint64_t mask) {
  const std::size_t n = names.size();
  Precedence p;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mask >> (a * n + b) & 1u)
        p.add(names[a], names[b]);
  return p;
}

OrientResult search(OrderId id, const Trs &trs, const SearchConfig &cfg) { return Searcher(id, trs, cfg).run(); }

} // namespace ackbo
