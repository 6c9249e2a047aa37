#pragma once

#include <memory>
#include <string>

#include "woundlab/bivar.hpp"
#include "woundlab/hassewitt.hpp"
#include "woundlab/laurent.hpp"
#include "woundlab/russell.hpp"

namespace woundlab {

/// Expression AST for the textual grammar: sums and differences of terms,
/// factors joined by * and /, powers with integer (possibly negative)
/// exponents, parentheses, integers, and the variables t, s, t0, t1, u, v, w
/// (w is the field generator).
struct Expr {
  enum class Kind { Number, Variable, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Number;
  long long number = 0;
  std::string var;
  long long exponent = 1;
  std::vector<std::shared_ptr<Expr>> args;
};

std::shared_ptr<Expr> parse_expression(const std::string& text);

/// Field spec strings: "F9", "F4:w^2+w+1". The optional polynomial is the
/// modulus in w over the prime field.
const FieldSpec* parse_field_spec(const std::string& text);

FieldElement eval_field_element(const Expr& e, const FieldSpec* s);
RatFunc eval_ratfunc(const Expr& e, const FieldSpec* s);
/// Variables s and t; w allowed as generator.
BivarRatFunc eval_bivar(const Expr& e, const FieldSpec* s);
/// Variable t with negative exponents allowed; division only by monomials.
LaurentSeries eval_laurent(const Expr& e, const FieldSpec* s);
/// Homogeneous form in t0, t1.
BinaryForm eval_binary_form(const Expr& e, const FieldSpec* s);

/// Russell equations from u^(p^n) + v + a_1 v^p + ... text. The univariate
/// reading requires the coefficients to avoid s.
RussellEquation<RatFunc> eval_russell(const Expr& e, const FieldSpec* s);
RussellEquation<BivarRatFunc> eval_russell_bivar(const Expr& e, const FieldSpec* s);

/// The compact form "p=3 n=1 a=[t]"; list entries are coefficient
/// expressions, a_1 first.
RussellEquation<RatFunc> parse_russell_compact(const std::string& text, const FieldSpec* s);

/// Convenience: parse + eval.
RatFunc parse_ratfunc(const std::string& text, const FieldSpec* s);
BivarRatFunc parse_bivar(const std::string& text, const FieldSpec* s);
LaurentSeries parse_laurent(const std::string& text, const FieldSpec* s);
BinaryForm parse_binary_form(const std::string& text, const FieldSpec* s);
FieldElement parse_field_element(const std::string& text, const FieldSpec* s);

}  // namespace woundlab
