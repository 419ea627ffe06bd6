#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "ackbo/certificate.hpp"
#include "ackbo/cli.hpp"
#include "ackbo/orient.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ackbo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name) {
  return (std::filesystem::temp_directory_path() / ("ackbo-cli-test-" + name)).string();
}

} // namespace

TEST_CASE("orient finds a precedence for the mixed system") {
  const Run r = invoke({"orient", "--order", "ackbo", data_path("r3.trs")});
  CHECK(r.code == 0);
  const auto [id, params] = read_certificate(r.out);
  CHECK(id == OrderId::ackbo);
  CHECK(params.precedence.greater("f", "+"));
  CHECK(params.precedence.greater("+", "g"));
  for (const Verdict &v : orient_check(id, params, load_trs("r3.trs")))
    CHECK(v.gt());
}

TEST_CASE("orient reports failure through the exit code") {
  const Run r = invoke({"orient", "--order", "kv-prime", "--max-weight", "2", data_path("r3.trs")});
  CHECK(r.code == 1);
  CHECK(r.out.find("ORIENTED\"") == std::string::npos);
}

TEST_CASE("compare prints the relation and exits by it") {
  const Run kv = invoke({"compare", "--order", "kv", "--weights", "f=0,+=0,a=1;w0=1", "f(x)+y", "x+y"});
  const Run gt = invoke({"compare", "--order", "s", "--weights", "f=0,a=1,+=0;w0=1", "--prec", "f>a>+",
                      "f(a + a)", "f(a) + f(a)"});
  CHECK(gt.code == 0);
  CHECK(gt.out.rfind("GT", 0) == 0);
  CHECK(kv.code == 1);
  CHECK(kv.out.rfind("NONE", 0) == 0);
}

TEST_CASE("canon agrees on AC-equal inputs") {
  const Run a = invoke({"canon", "(a + b) + c"});
  const Run b = invoke({"canon", "c + (b + a)"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(invoke({"canon", "(a * b) * c"}).out == invoke({"canon", "a * (b * c)"}).out);
}

TEST_CASE("check prints one verdict per rule") {
  const Run r = invoke({"check", "--order", "s", "--params", data_path("r1.params"), data_path("r1.trs")});
  CHECK(r.code == 0);
  CHECK(r.out.find("[1] GT") != std::string::npos);
  CHECK(r.out.find("[2] GT") != std::string::npos);
  CHECK(r.out.find("NOT ORIENTED") == std::string::npos);
  const Run bad = invoke({"check", "--order", "s", "--params", data_path("r1.params"), data_path("r2.trs")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("NOT ORIENTED") != std::string::npos);
}

TEST_CASE("certificates replay through check") {
  const std::string cert = temp_file("cert.json");
  const Run o = invoke({"orient", "--order", "ackbo", "-o", cert, data_path("r3.trs")});
  REQUIRE(o.code == 0);
  const Run replay = invoke({"check", "--certificate", cert, data_path("r3.trs")});
  CHECK(replay.code == 0);
  const Run wrong = invoke({"check", "--certificate", cert, data_path("r2.trs")});
  CHECK(wrong.code != 0);
  std::remove(cert.c_str());
}

TEST_CASE("gen writes encodings that parse back") {
  for (const char *target : {"kv-orient", "ackbo-orient"}) {
    const Run r = invoke({"gen", "--target", target, data_path("clause.cnf")});
    CHECK(r.code == 0);
    const Trs trs = parse_trs(r.out);
    CHECK(trs.signature.contains("e_1_2"));
  }
  const std::string witness = temp_file("witness.params");
  const Run w = invoke({"gen", "--target", "kv-orient", "--witness", witness, data_path("clause.cnf")});
  CHECK(w.code == 0);
  const OrderParams p = parse_params(slurp(witness));
  const Trs trs = parse_trs(w.out);
  for (const Verdict &v : orient_check(OrderId::kv, p, trs))
    CHECK(v.gt());
  std::remove(witness.c_str());
  const Run unsat = invoke({"gen", "--target", "kv-orient", "--witness", witness, data_path("unsat.cnf")});
  CHECK(unsat.code != 0);
  const Run m = invoke({"gen", "--target", "kvprime-member", data_path("clause.cnf")});
  CHECK(m.code == 0);
  CHECK(m.out.find("; s = ") != std::string::npos);
}

TEST_CASE("export-smt emits a QF_LIA script") {
  const Run r = invoke({"export-smt", "--order", "kv", data_path("r1.trs")});
  CHECK(r.code == 0);
  CHECK(r.out.find("(set-logic QF_LIA)") != std::string::npos);
  CHECK(r.out.find("(check-sat)") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({"compare", "--order", "nope", "a", "b"}).code == 2);
  CHECK(invoke({"canon", "f(a,"}).code == 2);
  CHECK(invoke({"check", "--order", "kv", data_path("missing.trs")}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}
