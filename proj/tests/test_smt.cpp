#include <doctest.h>

#include "ackbo/smt.hpp"
#include "ackbo/orient.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::size_t count(const std::string &text, const std::string &needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++n;
  return n;
}

} // namespace

TEST_CASE("a single ground rule yields one weight-or-precedence disjunction") {
  const Trs trs = make_trs({{T("a"), T("b")}});
  const std::string smt = export_constraints(OrderId::ackbo, trs);
  CHECK(smt.find("(set-logic QF_LIA)") != std::string::npos);
  CHECK(smt.find("(declare-fun w0 () Int)") != std::string::npos);
  CHECK(smt.find("(declare-fun p_0_1 () Bool)") != std::string::npos);
  CHECK(smt.find("(assert (=> g_0 (or c_0_w c_0_1)))") != std::string::npos);
  CHECK(count(smt, "(or ") == 1);
  CHECK(smt.find("(check-sat)") != std::string::npos);
}

TEST_CASE("export covers the supported orders only") {
  const Trs trs = load_trs("r1.trs");
  for (OrderId id : {OrderId::s, OrderId::kv, OrderId::kv_prime, OrderId::ackbo})
    CHECK_NOTHROW(export_constraints(id, trs));
  for (OrderId id : {OrderId::acrpo, OrderId::acrpo_prime, OrderId::ackbo_sc, OrderId::kv_ground})
    CHECK_THROWS_AS(export_constraints(id, trs), ConfigError);
}

TEST_CASE("S constraints keep AC symbols minimal") {
  const std::string smt = export_constraints(OrderId::s, load_trs("r1.trs"));
  // + is symbol 0; nothing may lie below it.
  CHECK(smt.find("(assert (not p_0_1))") != std::string::npos);
  CHECK(smt.find("(assert (not p_0_2))") != std::string::npos);
}

TEST_CASE("export is deterministic") {
  const Trs trs = load_trs("r3.trs");
  CHECK(export_constraints(OrderId::ackbo, trs) == export_constraints(OrderId::ackbo, trs));
}

TEST_CASE("models decode to parameters in every accepted syntax") {
  const Trs trs = load_trs("r1.trs"); // symbols 0 '+', 1 'a', 2 'f'
  const std::string model = "; weights\n"
                            "w0 1\n"
                            "w_0 = 0\n"
                            "w_1 -> 1\n"
                            "w_2 0\n"
                            "p_2_1 true\n"
                            "p_1_0 true\n"
                            "p_2_0 true\n"
                            "p_0_1 false\n"
                            "g_0 true\n"
                            "c_0_1 true\n";
  const OrderParams p = decode_model(model, trs);
  CHECK(p.weights.w0 == 1);
  CHECK(p.weights.of("a") == 1);
  CHECK(p.weights.of("f") == 0);
  CHECK(p.precedence.greater("f", "a"));
  CHECK(p.precedence.greater("a", "+"));
  CHECK_FALSE(p.precedence.greater("+", "a"));
  for (const auto &v : orient_check(OrderId::s, p, trs))
    CHECK(v.gt());
}

TEST_CASE("malformed models are rejected") {
  const Trs trs = load_trs("r1.trs");
  CHECK_THROWS_AS(decode_model("w0\n", trs), ConfigError);
  CHECK_THROWS_AS(decode_model("w_1 heavy\n", trs), ConfigError);
  CHECK_THROWS_AS(decode_model("p_0_1 1\n", trs), ConfigError);
  CHECK_THROWS_AS(decode_model("p_0_1 true\np_1_0 true\n", trs), ConfigError);
  CHECK_NOTHROW(decode_model("unknown 3\nw_9 4\n", trs));
}
