#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ackbo/params.hpp"
#include "ackbo/reductions.hpp"
#include "ackbo/term.hpp"
#include "ackbo/trs.hpp"

namespace ackbo {

/// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string &msg);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

/// How bare identifiers and infix operators of a term are read.
struct TermSyntax {
  /// Identifiers always read as variables.
  std::set<std::string, std::less<>> variables;
  /// Symbols read as AC.
  std::set<std::string, std::less<>> ac;
  /// Every binary operator symbol (e.g. +) is AC.
  bool infix_ac = false;
  /// A bare identifier is a variable unless listed in `symbols`.
  bool undeclared_vars = false;
  std::set<std::string, std::less<>> symbols;
};

/// Terms use prefix application f(t1, ..., tn), constants without
/// parentheses, and left-associative infix operators of equal precedence
/// built from the characters + * & | ^ ~ @ $ % < > = . / \ - ! ? : and any
/// non-ASCII byte. Throws ParseError.
Term parse_term(std::string_view text, const TermSyntax &syntax = {});

/// Two terms read against one signature, so a symbol must have the same
/// arity in both and cannot be a variable in one of them.
std::pair<Term, Term> parse_term_pair(std::string_view s, std::string_view t, const TermSyntax &syntax = {});

/// TPDB legacy format: (VAR ...), (THEORY (AC ...)), (RULES l -> r ...).
/// COMMENT and STRATEGY sections are skipped. Arities are inferred and
/// must be consistent. Throws ParseError.
Trs parse_trs(std::string_view text);
std::string print_trs(const Trs &trs);

/// DIMACS CNF ("p cnf V C" header, clauses terminated by 0, "c" comments).
CnfFormula parse_dimacs(std::string_view text);
std::string print_dimacs(const CnfFormula &phi);

/// Sidecar parameter file, one directive per line, `;` starts a comment:
///   w <sym> <int>        w0 <int>        prec <f> > <g> [> <h> ...]
///   sc <f> <i> <int>     status <f> lex|mul
OrderParams parse_params(std::string_view text);
std::string print_params(const OrderParams &params);

/// Inline flag syntax. Weights: "f=0,+=0,a=1;w0=1" (`,` or `;` separated).
void parse_weights_flag(std::string_view text, WeightFn &out);
/// Precedence chains: "f>a>+,g>b".
void parse_prec_flag(std::string_view text, Precedence &out);
/// Subterm coefficients: "f:1=4,g:2=3".
void parse_sc_flag(std::string_view text, WeightFn &out);
/// Status: "h=mul,g=lex".
void parse_status_flag(std::string_view text, OrderParams &out);

} // namespace ackbo
