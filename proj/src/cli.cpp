#include "ackbo/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "ackbo/certificate.hpp"
#include "ackbo/orient.hpp"
#include "ackbo/parse.hpp"
#include "ackbo/reductions.hpp"
#include "ackbo/smt.hpp"

namespace ackbo::cli {

namespace {

std::string read_input(const std::string &path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw ConfigError("cannot write '" + path + "'");
}

OrderId order_of(const std::string &name) {
  auto id = parse_order_id(name);
  if (!id)
    throw ConfigError("unknown order '" + name +
                      "' (expected s, kv-ground, kv, kv-prime, ackbo, ackbo-sc, acrpo or acrpo-prime)");
  return *id;
}

struct ParamFlags {
  std::string file, weights, prec, sc, status;

  void attach(CLI::App *cmd) {
    cmd->add_option("--params", file, "Parameter file (w, w0, prec, sc, status lines)");
    cmd->add_option("--weights", weights, "Weights, e.g. 'f=0,+=0,a=1;w0=1'");
    cmd->add_option("--prec", prec, "Precedence chains, e.g. 'f>+>a,g>b'");
    cmd->add_option("--sc", sc, "Subterm coefficients, e.g. 'f:1=2'");
    cmd->add_option("--status", status, "Status for AC-RPO, e.g. 'h=mul'");
  }

  OrderParams build() const {
    OrderParams p = file.empty() ? OrderParams{} : parse_params(read_input(file));
    parse_weights_flag(weights, p.weights);
    parse_prec_flag(prec, p.precedence);
    parse_sc_flag(sc, p.weights);
    parse_status_flag(status, p);
    return p;
  }
};

// Zero-weight unary symbols must sit above everything else; place them
// there unless the given precedence already says otherwise.
void lift_zero_unary(OrderId id, OrderParams &p, const Signature &sig) {
  if (!is_kbo_family(id))
    return;
  const auto syms = sig.symbols();
  for (const Symbol &f : syms) {
    auto it = p.weights.w.find(f.name);
    if (f.arity != 1 || it == p.weights.w.end() || it->second != 0)
      continue;
    for (const Symbol &g : syms)
      if (g.name != f.name && !p.precedence.comparable(f.name, g.name))
        p.precedence.add(f.name, g.name);
  }
}

std::set<std::string, std::less<>> mentioned(const OrderParams &p) {
  std::set<std::string, std::less<>> out;
  for (const auto &[f, w] : p.weights.w)
    out.insert(f);
  for (const auto &[f, g] : p.precedence.pairs()) {
    out.insert(f);
    out.insert(g);
  }
  for (const auto &[key, v] : p.weights.sc)
    out.insert(key.first);
  for (const auto &[f, s] : p.status)
    out.insert(f);
  return out;
}

std::vector<std::string> split_names(const std::string &text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty())
      out.push_back(item);
  return out;
}

void print_verdict(std::ostream &out, const Verdict &v, const std::string &indent) {
  for (const TraceStep &step : v.trace)
    out << indent << step.label << ": " << to_string(step.lhs) << " > " << to_string(step.rhs) << '\n';
}

struct TermFlags {
  std::vector<std::string> ac;
  std::string vars, symbols;

  void attach(CLI::App *cmd) {
    cmd->add_option("--ac", ac, "Additional AC symbol (repeatable); binary operators are AC by default");
    cmd->add_option("--vars", vars, "Comma-separated identifiers to read as variables");
    cmd->add_option("--symbols", symbols, "Comma-separated identifiers to read as constants");
  }

  TermSyntax syntax(const OrderParams &p) const {
    TermSyntax syn;
    syn.infix_ac = true;
    syn.undeclared_vars = true;
    syn.symbols = mentioned(p);
    for (const auto &f : ac) {
      syn.ac.insert(f);
      syn.symbols.insert(f);
    }
    for (const auto &c : split_names(symbols))
      syn.symbols.insert(c);
    for (const auto &x : split_names(vars)) {
      syn.variables.insert(x);
      syn.symbols.erase(x);
    }
    return syn;
  }
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"AC-compatible Knuth-Bendix and path orders: comparison, orientation search, reductions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string order;
  std::string trs_path, cert_path, output_path, witness_path, target, mode = "total";
  std::string s_text, t_text, term_text;
  std::int64_t max_weight = 3, max_sc = 2;
  double budget = 60.0;
  unsigned threads = 0;

  ParamFlags check_params, cmp_params, orient_params;
  TermFlags cmp_terms, canon_terms;

  auto *check = app.add_subcommand("check", "Compare both sides of every rule under fixed parameters");
  check->add_option("--order", order, "Order to use");
  check_params.attach(check);
  check->add_option("--certificate", cert_path, "Replay a certificate written by 'orient'");
  check->add_option("trs", trs_path, "TRS file in TPDB format ('-' for stdin)")->required();

  auto *orient = app.add_subcommand("orient", "Search for parameters orienting every rule");
  orient->add_option("--order", order, "Order to use")->required();
  orient->add_option("--mode", mode, "Precedence class: total, partial or fixed")
      ->check(CLI::IsMember({"total", "partial", "fixed"}));
  orient->add_option("--max-weight", max_weight, "Largest symbol weight tried")->check(CLI::PositiveNumber);
  orient->add_option("--max-sc", max_sc, "Largest subterm coefficient tried")->check(CLI::PositiveNumber);
  orient->add_option("--time-budget", budget, "Seconds before giving up")->check(CLI::PositiveNumber);
  orient->add_option("--threads", threads, "Worker threads (0: all cores)");
  orient->add_option("--prec", orient_params.prec, "Precedence for --mode fixed");
  orient->add_option("--status", orient_params.status, "Status for AC-RPO, e.g. 'h=mul'");
  orient->add_option("-o,--output", output_path, "Write the certificate here instead of stdout");
  orient->add_option("trs", trs_path, "TRS file in TPDB format ('-' for stdin)")->required();

  auto *cmp = app.add_subcommand("compare", "Compare two terms");
  cmp->add_option("--order", order, "Order to use")->required();
  cmp_params.attach(cmp);
  cmp_terms.attach(cmp);
  cmp->add_option("s", s_text, "Left term")->required();
  cmp->add_option("t", t_text, "Right term")->required();

  auto *gen = app.add_subcommand("gen", "Generate hardness instances from a CNF");
  gen->add_option("--target", target, "kv-orient, ackbo-orient or kvprime-member")
      ->required()
      ->check(CLI::IsMember({"kv-orient", "ackbo-orient", "kvprime-member"}));
  gen->add_option("--witness", witness_path, "Also write witness parameters of a satisfiable formula here");
  gen->add_option("cnf", trs_path, "DIMACS file ('-' for stdin)")->required();

  auto *canon = app.add_subcommand("canon", "Print the AC-canonical form of a term");
  canon_terms.attach(canon);
  canon->add_option("term", term_text, "Term")->required();

  auto *smt = app.add_subcommand("export-smt", "Emit orientability constraints as SMT-LIB 2");
  smt->add_option("--order", order, "Order to use (s, kv, kv-prime or ackbo)")->required();
  smt->add_option("trs", trs_path, "TRS file in TPDB format ('-' for stdin)")->required();
  std::string model_path;
  smt->add_option("--decode", model_path, "Instead of exporting, turn a solver model (name value lines) into a parameter file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      const Trs trs = parse_trs(read_input(trs_path));
      OrderParams params;
      OrderId id;
      std::optional<nlohmann::json> cert;
      if (!cert_path.empty()) {
        const std::string text = read_input(cert_path);
        std::tie(id, params) = read_certificate(text);
        cert = nlohmann::json::parse(text);
        if (!order.empty() && order_of(order) != id)
          throw ConfigError("--order differs from the certificate's order");
      } else {
        if (order.empty())
          throw ConfigError("check needs --order or --certificate");
        id = order_of(order);
        params = check_params.build();
        lift_zero_unary(id, params, trs.signature);
      }
      const auto verdicts = orient_check(id, params, trs);
      bool all_gt = true, replay_ok = true;
      for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const Verdict &v = verdicts[i];
        all_gt = all_gt && v.gt();
        out << '[' << i + 1 << "] " << to_string(v.relation) << "  " << to_string(trs.rules[i].lhs) << " -> "
            << to_string(trs.rules[i].rhs) << '\n';
        print_verdict(out, v, "      ");
        if (cert && cert->contains("rules")) {
          const auto &rules = cert->at("rules");
          bool same = i < rules.size() && rules[i].at("verdict").get<std::string>() == to_string(v.relation) &&
                      rules[i].at("trace").size() == v.trace.size();
          for (std::size_t k = 0; same && k < v.trace.size(); ++k)
            same = rules[i].at("trace")[k].at("case").get<std::string>() == v.trace[k].label;
          if (!same) {
            out << "      certificate mismatch\n";
            replay_ok = false;
          }
        }
      }
      if (cert && cert->contains("rules") && cert->at("rules").size() != verdicts.size()) {
        out << "certificate lists " << cert->at("rules").size() << " rules, TRS has " << verdicts.size() << '\n';
        replay_ok = false;
      }
      out << (all_gt && replay_ok ? "ORIENTED" : "NOT ORIENTED") << '\n';
      return all_gt && replay_ok ? 0 : 1;
    }

    if (*orient) {
      const OrderId id = order_of(order);
      const Trs trs = parse_trs(read_input(trs_path));
      SearchConfig cfg;
      cfg.mode = mode == "total" ? PrecedenceMode::total : mode == "partial" ? PrecedenceMode::partial
                                                                             : PrecedenceMode::fixed;
      const OrderParams given = orient_params.build();
      cfg.fixed = given.precedence;
      cfg.status = given.status;
      cfg.max_weight = max_weight;
      cfg.max_sc = max_sc;
      cfg.time_budget = budget;
      cfg.threads = threads;
      const OrientResult result = search(id, trs, cfg);
      const std::string cert = certificate_json(id, trs, result);
      if (output_path.empty()) {
        out << cert;
      } else {
        write_output(output_path, cert);
        out << to_string(result.status) << '\n';
      }
      return result.status == OrientStatus::oriented ? 0 : 1;
    }

    if (*cmp) {
      const OrderId id = order_of(order);
      OrderParams params = cmp_params.build();
      const auto [s, t] = parse_term_pair(s_text, t_text, cmp_terms.syntax(params));
      Signature sig;
      sig.add_symbols_of(s);
      sig.add_symbols_of(t);
      lift_zero_unary(id, params, sig);
      Comparator c(id, params, sig);
      const Verdict v = c.compare(s, t);
      out << to_string(v.relation) << '\n';
      print_verdict(out, v, "  ");
      return v.gt() ? 0 : 1;
    }

    if (*gen) {
      const CnfFormula phi = parse_dimacs(read_input(trs_path));
      if (target == "kvprime-member") {
        const MembershipInstance inst = encode_kvprime_membership(phi);
        out << "; s = " << to_string(inst.s) << '\n' << "; t = " << to_string(inst.t) << '\n';
        out << print_params(inst.params);
        return 0;
      }
      const bool kv = target == "kv-orient";
      out << print_trs(kv ? encode_kv_orientability(phi) : encode_ackbo_orientability(phi));
      if (!witness_path.empty()) {
        const auto alpha = sat_bruteforce(phi);
        if (!alpha) {
          err << "formula is unsatisfiable; no witness written\n";
          return 1;
        }
        write_output(witness_path, print_params(construct_witness(kv ? OrderId::kv : OrderId::ackbo, phi, *alpha)));
      }
      return 0;
    }

    if (*canon) {
      const Term t = parse_term(term_text, canon_terms.syntax({}));
      out << to_string(ac_canonical(t)) << '\n';
      return 0;
    }

    if (*smt) {
      const OrderId id = order_of(order);
      const Trs trs = parse_trs(read_input(trs_path));
      if (!model_path.empty())
        out << print_params(decode_model(read_input(model_path), trs));
      else
        out << export_constraints(id, trs);
      return 0;
    }
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const TermError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace ackbo::cli
