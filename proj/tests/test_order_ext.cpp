#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

// Terms stand for integers via their size; ties on size are broken by a
// second key that geq respects but gt ignores, so geq minus gt is not
// symmetric.
std::int64_t key(const Term &t) { return static_cast<std::int64_t>(t.size()); }
std::int64_t tie(const Term &t) { return t.is_var() ? 0 : static_cast<std::int64_t>(t.name().size()); }

OrderPairOracle size_pair() {
  return {[](const Term &s, const Term &t) { return key(s) >= key(t); },
          [](const Term &s, const Term &t) { return key(s) > key(t); }, true};
}

OrderPairOracle skewed_pair() {
  return {[](const Term &s, const Term &t) { return key(s) > key(t) || (key(s) == key(t) && tie(s) >= tie(t)); },
          [](const Term &s, const Term &t) { return key(s) > key(t); }, false};
}

} // namespace

TEST_CASE("lexicographic extension") {
  const auto o = size_pair();
  const std::vector<Term> a{T("f(a)"), T("a")}, b{T("a"), T("f(f(a))")}, c{T("b"), T("a")};
  CHECK(lex_ext(o, a, b) == ExtVerdict::strict);
  CHECK(lex_ext(o, b, a) == ExtVerdict::none);
  CHECK(lex_ext(o, c, std::vector<Term>{T("a"), T("b")}) == ExtVerdict::weak);
  CHECK(lex_ext(o, std::vector<Term>{}, std::vector<Term>{}) == ExtVerdict::weak);
  CHECK_THROWS_AS(lex_ext(o, a, std::span<const Term>(c).first(1)), std::invalid_argument);
}

TEST_CASE("multiset extension on small cases") {
  const auto o = size_pair();
  using V = std::vector<Term>;
  CHECK(mul_ext(o, V{T("f(a)")}, V{T("a"), T("b"), T("a")}) == ExtVerdict::strict);
  CHECK(mul_ext(o, V{T("a"), T("b")}, V{T("b"), T("a")}) == ExtVerdict::weak);
  CHECK(mul_ext(o, V{T("a")}, V{T("a"), T("a")}) == ExtVerdict::none);
  CHECK(mul_ext(o, V{T("a")}, V{}) == ExtVerdict::strict);
  CHECK(mul_ext(o, V{}, V{}) == ExtVerdict::weak);
  CHECK(mul_ext(o, V{}, V{T("a")}) == ExtVerdict::none);

  MulWitness w;
  CHECK(mul_ext(o, V{T("a"), T("f(a)")}, V{T("b"), T("c")}, &w) == ExtVerdict::strict);
  CHECK(w.matched.size() + w.covering.size() >= 2);
}

TEST_CASE("multiset extension agrees with the definition on random multisets") {
  const std::vector<Symbol> syms{Symbol("f", 1), Symbol("g", 2), Symbol("a", 0), Symbol("bb", 0)};
  TermGen gen(syms, {"x"}, 3);
  for (const auto &o : {size_pair(), skewed_pair()}) {
    OrderPairOracle search = o;
    search.equiv_symmetric = false;
    for (int i = 0; i < 1500; ++i) {
      std::vector<Term> m, n;
      for (std::size_t k = gen.pick(5); k > 0; --k)
        m.push_back(gen(1 + gen.pick(4)));
      for (std::size_t k = gen.pick(5); k > 0; --k)
        n.push_back(gen(1 + gen.pick(4)));
      const ExtVerdict want = mul_oracle(o, m, n);
      CHECK(mul_ext(search, m, n) == want);
      if (o.equiv_symmetric)
        CHECK(mul_ext(o, m, n) == want);
    }
  }
}

TEST_CASE("restricted multisets and the two sides of S R^f T") {
  Precedence p;
  p.add_chain(std::vector<std::string>{"f", "+", "a"});
  const Symbol plus("+", 2, true);
  const std::vector<Term> s{T("a"), T("f(f(a))"), T("x")}, t{T("f(a)"), T("f(a)"), T("y"), T("x")};
  using V = std::vector<Term>;
  CHECK(multiset_equal(restrict_vars(s), V{T("x")}));
  CHECK(multiset_equal(restrict_root(s, p, plus, RootRel::not_less), V{T("f(f(a))")}));
  CHECK(multiset_equal(restrict_root(s, p, plus, RootRel::less), V{T("a")}));
  CHECK(multiset_equal(restrict_root(s, p, plus, RootRel::greater), V{T("f(f(a))")}));
  const auto [l, r] = f_sides(s, t, plus, p);
  CHECK(multiset_equal(l, V{T("f(f(a))")}));
  CHECK(multiset_equal(r, V{T("f(a)"), T("f(a)"), T("y")}));
  CHECK(cmp_f(size_pair(), s, t, plus, p) == ExtVerdict::strict);
  CHECK(cmp_f(size_pair(), t, s, plus, p) == ExtVerdict::none);
}
